#pragma once

#include "twd/centering.hpp"
#include "twd/diagram.hpp"
#include "twd/fan.hpp"
#include "twd/lattice.hpp"
#include "twd/polytope.hpp"
#include "twd/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace twd::testing {

inline HalfSpacePolytope octagon()
{
    return {{{{1, 0}, -2},
             {{1, 1}, -3},
             {{0, 1}, -2},
             {{-1, 1}, -3},
             {{-1, 0}, -2},
             {{-1, -1}, -3},
             {{0, -1}, -2},
             {{1, -1}, -3}}};
}

inline SlopeSet octagon_slopes() { return {{1, 0}, {0, -1}, {0, -1}, {-1, 0}, {-1, 0}, {0, 1}, {0, 1}, {1, 0}}; }

inline std::vector<std::size_t> all_vertices(const HalfSpacePolytope& p)
{
    std::vector<std::size_t> v(p.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = k;
    return v;
}

inline long long uniform(std::mt19937& rng, long long lo, long long hi)
{
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline IntVec2 random_primitive(std::mt19937& rng, long long bound)
{
    for (;;) {
        IntVec2 v{uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
        if (v.primitive())
            return v;
    }
}

inline SlopeSet random_slopes(std::mt19937& rng, std::size_t max_count, long long bound)
{
    SlopeSet c(static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(max_count))));
    for (IntVec2& s : c)
        s = random_primitive(rng, bound);
    return c;
}

inline UniMat2 random_sl2z(std::mt19937& rng, int steps = 4)
{
    const UniMat2 gens[] = {{1, 1, 0, 1}, {1, 0, 1, 1}, {0, -1, 1, 0}, {1, -1, 0, 1}};
    UniMat2 g;
    for (int k = 0; k < steps; ++k)
        g = g * gens[uniform(rng, 0, 3)];
    return g;
}

/// Random unimodular pair (u, v) with det(u, v) = 1.
inline std::pair<IntVec2, IntVec2> random_det1_pair(std::mt19937& rng)
{
    UniMat2 g = random_sl2z(rng, static_cast<int>(uniform(rng, 1, 8)));
    return {{g.a(), g.c()}, {g.b(), g.d()}};
}

/// Random Delzant polygon. Roughly half are monotone by construction.
inline HalfSpacePolytope random_polytope(std::mt19937& rng, bool& monotone_by_construction)
{
    HalfSpacePolytope p;
    monotone_by_construction = uniform(rng, 0, 1) == 1;
    if (monotone_by_construction) {
        switch (uniform(rng, 0, 2)) {
        case 0: {
            p = polytopes::cp2(3);
            auto k = uniform(rng, 0, 3);
            for (long long j = 0; j < k; ++j)
                p = blow_up(p, static_cast<std::size_t>(2 * j), 1);
            break;
        }
        case 1:
            p = polytopes::cp1xcp1(2, 2);
            if (uniform(rng, 0, 1))
                p = blow_up(p, 0, 1);
            break;
        default:
            p = blow_up(blow_up(polytopes::cp1xcp1(2, 2), 0, 1), 3, 1);
        }
    } else {
        Rational a(uniform(rng, 2, 9), uniform(rng, 1, 3)), b(uniform(rng, 2, 9), uniform(rng, 1, 3));
        p = uniform(rng, 0, 1) ? polytopes::cp1xcp1(a, b) : polytopes::cp2(a + b);
        auto k = uniform(rng, 0, 3);
        for (long long j = 0; j < k; ++j) {
            std::size_t v = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(p.size()) - 1));
            Rational eps(uniform(rng, 1, 5), uniform(rng, 4, 12));
            try {
                p = blow_up(p, v, eps);
            } catch (const DomainError&) {
            }
        }
    }
    p = apply_sl2z(p, random_sl2z(rng));
    p = translate(p, {Rational(uniform(rng, -5, 5), uniform(rng, 1, 4)), Rational(uniform(rng, -5, 5), uniform(rng, 1, 4))});
    return p;
}

/// Minimal XML well-formedness check: balanced tags, quoted attributes,
/// a single root element.
inline bool xml_well_formed(const std::string& s)
{
    std::vector<std::string> open;
    std::size_t i = 0, roots = 0;
    if (s.rfind("<?xml", 0) == 0) {
        i = s.find("?>");
        if (i == std::string::npos)
            return false;
        i += 2;
    }
    while ((i = s.find('<', i)) != std::string::npos) {
        std::size_t j = s.find('>', i);
        if (j == std::string::npos)
            return false;
        std::string tag = s.substr(i + 1, j - i - 1);
        i = j + 1;
        if (tag.empty())
            return false;
        if (std::count(tag.begin(), tag.end(), '"') % 2 != 0)
            return false;
        if (tag[0] == '/') {
            if (open.empty() || open.back() != tag.substr(1))
                return false;
            open.pop_back();
            continue;
        }
        bool self = tag.back() == '/';
        std::string name = tag.substr(0, tag.find_first_of(" /"));
        if (open.empty() && ++roots > 1)
            return false;
        if (!self)
            open.push_back(name);
    }
    return open.empty() && roots == 1;
}

/// Edge-crossing sequence of the segment from (1/2, 1/2 + eps) in direction
/// (a, b), computed numerically; independent of the exact implementation.
inline std::string torus_word_oracle(long long a, long long b)
{
    const double eps = 1e-7;
    std::vector<std::pair<double, std::string>> hits;
    const double x0 = 0.5, y0 = 0.5 + eps;
    for (long long k = -20; k <= 20; ++k) {
        if (a != 0) {
            double t = (static_cast<double>(k) - x0) / static_cast<double>(a);
            if (t > 0 && t < 1)
                hits.push_back({t, a > 0 ? "B+" : "B-"});
        }
        if (b != 0) {
            double t = (static_cast<double>(k) - y0) / static_cast<double>(b);
            if (t > 0 && t < 1)
                hits.push_back({t, b > 0 ? "C+" : "C-"});
        }
    }
    std::sort(hits.begin(), hits.end());
    std::string out;
    for (const auto& h : hits)
        out += (out.empty() ? "" : " ") + h.second;
    return out;
}

/// Boundary points from edge gcds and interior points from Pick's
/// identity 2A = 2I + B - 2.
struct PickCensus {
    long long interior = 0, boundary = 0;
};

inline PickCensus pick_census(long long x1, long long y1, long long x2, long long y2)
{
    auto g = [](long long a, long long b) { return std::gcd(std::llabs(a), std::llabs(b)); };
    PickCensus c;
    c.boundary = g(x1, y1) + g(x2, y2) + g(x2 - x1, y2 - y1);
    long long twice_area = std::llabs(x1 * y2 - x2 * y1);
    c.interior = (twice_area - c.boundary + 2) / 2;
    return c;
}

inline bool is_unimodular(const IntMatrix& m)
{
    Int d = determinant(m);
    return d == 1 || d == -1;
}

/// Word of component c, e.g. "B+ C-" on the torus.
inline std::string word_string(const FrontDiagram& d, std::size_t c)
{
    return to_string(analyze(d).words[c], d.handles);
}

}  // namespace twd::testing
