#include "twd/smoothing.hpp"

#include "twd/fm.hpp"

#include <algorithm>
#include <map>

namespace twd {

std::vector<std::size_t> normalized_vertices(const SmoothingSpec& spec)
{
    require_valid(spec.polytope);
    std::vector<std::size_t> v = spec.smoothed;
    for (std::size_t k : v)
        if (k >= spec.polytope.size())
            throw DomainError("vertex " + std::to_string(k) + " out of range (polytope has " +
                              std::to_string(spec.polytope.size()) + " vertices)");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

SlopeSet slopes_of(const SmoothingSpec& spec)
{
    SlopeSet out;
    for (std::size_t k : normalized_vertices(spec))
        out.push_back(slope_at(spec.polytope, k));
    return out;
}

IntMatrix slope_matrix(const SlopeSet& c)
{
    IntMatrix phi(2, c.size() + 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
        phi(0, j + 1) = c[j].x;
        phi(1, j + 1) = c[j].y;
    }
    return phi;
}

WHomology homology_W(const SlopeSet& c)
{
    for (const IntVec2& s : c)
        if (!s.primitive())
            throw DomainError("homology_W: slope " + to_string(s) + " is not primitive");
    CokerKer ck = coker_ker(slope_matrix(c));
    WHomology h{ck.coker, AbelianGroup::free(ck.ker_rank), {}};
    h.pi1.generators = {"x", "y"};
    h.pi1.relators.push_back({{0, 1}, {1, 1}, {0, -1}, {1, -1}});
    for (const IntVec2& s : c) {
        std::vector<std::pair<std::size_t, Int>> rel;
        for (const Letter& l : torus_word(s.x, s.y).letters) {
            if (!rel.empty() && rel.back().first == l.handle)
                rel.back().second += l.sign;
            else
                rel.push_back({l.handle, Int(l.sign)});
        }
        h.pi1.relators.push_back(rel);
    }
    return h;
}

Int tb_formula(const Int& a, const Int& b)
{
    if (gcd(a, b) != 1)
        throw DomainError("tb_formula: (" + to_string(a) + "," + to_string(b) + ") is not primitive");
    if (b >= 0)
        return -2 * b * b - abs(a * b);
    return a * b;
}

namespace {

bool parallel(const IntVec2& u, const IntVec2& v) { return cross(u, v) == 0; }

std::vector<IntVec2> sorted(SlopeSet c)
{
    std::sort(c.begin(), c.end(), lex_less);
    return c;
}

bool maps_onto(const UniMat2& G, const SlopeSet& c1, const std::vector<IntVec2>& c2_sorted)
{
    SlopeSet img;
    for (const IntVec2& v : c1)
        img.push_back(G.apply(v));
    return sorted(img) == c2_sorted;
}

// Signed multiplicities along the line of a primitive direction d, as
// (count of +d, count of -d).
std::pair<std::size_t, std::size_t> signs_along(const SlopeSet& c, const IntVec2& d)
{
    std::size_t pos = 0, neg = 0;
    for (const IntVec2& v : c)
        (v == d ? pos : neg) += 1;
    return {pos, neg};
}

// Some G in SL(2,Z) with G u = w, for primitive u, w.
UniMat2 carry(const IntVec2& u, const IntVec2& w)
{
    // Columns (u, u') and (w, w') are unimodular bases.
    Bezout bu = bezout(u.x, u.y);
    Bezout bw = bezout(w.x, w.y);
    // u' = (-q, p) satisfies det(u, u') = p u.x + q u.y = 1.
    IntVec2 up{-bu.q, bu.p};
    IntVec2 wp{-bw.q, bw.p};
    UniMat2 A(u.x, up.x, u.y, up.y);
    UniMat2 B(w.x, wp.x, w.y, wp.y);
    return B * A.inverse();
}

}  // namespace

std::optional<UniMat2> sl2z_equivalent(const SlopeSet& c1, const SlopeSet& c2)
{
    for (const SlopeSet* c : {&c1, &c2})
        for (const IntVec2& v : *c)
            if (!v.primitive())
                throw DomainError("sl2z_equivalent: " + to_string(v) + " is not primitive");
    if (c1.size() != c2.size())
        return std::nullopt;
    if (c1.empty())
        return UniMat2::identity();
    const std::vector<IntVec2> s1 = sorted(c1), s2 = sorted(c2);

    for (std::size_t i = 0; i < s1.size(); ++i)
        for (std::size_t j = i + 1; j < s1.size(); ++j) {
            if (parallel(s1[i], s1[j]))
                continue;
            const IntVec2& u = s1[i];
            const IntVec2& v = s1[j];
            const Int det = cross(u, v);
            for (std::size_t p = 0; p < s2.size(); ++p)
                for (std::size_t q = 0; q < s2.size(); ++q) {
                    if (p == q || cross(s2[p], s2[q]) != det)
                        continue;
                    // G = [u' v'] [u v]^{-1}; integral iff det divides.
                    const IntVec2& w = s2[p];
                    const IntVec2& z = s2[q];
                    Int a = w.x * v.y - z.x * u.y, b = z.x * u.x - w.x * v.x;
                    Int c = w.y * v.y - z.y * u.y, d = z.y * u.x - w.y * v.x;
                    if (a % det != 0 || b % det != 0 || c % det != 0 || d % det != 0)
                        continue;
                    UniMat2 G(a / det, b / det, c / det, d / det);
                    if (maps_onto(G, c1, s2))
                        return G;
                }
            return std::nullopt;
        }

    // Every slope lies on one line.
    const IntVec2 d1 = s1.front();
    for (const IntVec2& v : s2)
        if (!parallel(v, s2.front()))
            return std::nullopt;
    const auto [p1, n1] = signs_along(c1, d1);
    for (const IntVec2& d2 : {s2.front(), IntVec2(-s2.front())}) {
        const auto [p2, n2] = signs_along(c2, d2);
        if (p1 == p2 && n1 == n2) {
            UniMat2 G = carry(d1, d2);
            if (maps_onto(G, c1, s2))
                return G;
        }
    }
    return std::nullopt;
}

DivisorComponents divisor_components(const SmoothingSpec& spec)
{
    const std::vector<std::size_t> sm = normalized_vertices(spec);
    const HalfSpacePolytope& p = spec.polytope;
    const std::size_t n = p.size();
    const auto es = edges(p);
    std::vector<bool> smooth(n, false);
    for (std::size_t k : sm)
        smooth[k] = true;

    DivisorComponents out;
    std::vector<std::size_t> comp_of_edge(n, 0);
    // Vertex k joins edge k and edge k+1.
    std::vector<std::size_t> starts;
    for (std::size_t v = 0; v < n; ++v)
        if (!smooth[v])
            starts.push_back(v);
    if (starts.empty()) {
        std::vector<std::size_t> all(n);
        for (std::size_t k = 0; k < n; ++k)
            all[k] = k;
        out.components.push_back(all);
    }
    for (std::size_t v : starts) {
        std::vector<std::size_t> chain;
        std::size_t e = (v + 1) % n;
        while (true) {
            chain.push_back(e);
            if (!smooth[e])  // vertex e closes edge e
                break;
            e = (e + 1) % n;
        }
        out.components.push_back(chain);
    }
    const std::size_t m = out.components.size();
    out.Q = IntMatrix(m, m);
    out.areas.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t e : out.components[i]) {
            comp_of_edge[e] = i;
            out.Q(i, i) += es[e].self_intersection;
            out.areas[i] += es[e].lattice_length;
        }
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t i = comp_of_edge[v], j = comp_of_edge[(v + 1) % n];
        if (smooth[v]) {
            out.Q(i, i) += 2;
        } else if (i == j) {
            out.Q(i, i) += 2;  // a node of the component with itself
        } else {
            out.Q(i, j) += 1;
            out.Q(j, i) += 1;
        }
    }
    return out;
}

ConcaveResult concave_obstruction(const IntMatrix& Q, const std::vector<Rational>& a)
{
    const std::size_t m = Q.rows();
    if (Q.cols() != m || a.size() != m)
        throw DomainError("concave_obstruction: size mismatch");
    if (!Q.is_symmetric())
        throw DomainError("concave_obstruction: Q is not symmetric");
    std::vector<LinConstraint> cs;
    for (std::size_t i = 0; i < m; ++i) {
        LinConstraint row{std::vector<Rational>(m), LinConstraint::Rel::Eq, a[i]};
        for (std::size_t j = 0; j < m; ++j)
            row.coeffs[j] = Rational(Q(i, j));
        cs.push_back(row);
    }
    ConcaveResult r;
    if (m > 0 && determinant(Q) != 0) {
        if (auto z = fm_solve(m, cs))
            r.affine_solution = *z;
    }
    for (std::size_t i = 0; i < m; ++i) {
        LinConstraint pos{std::vector<Rational>(m), LinConstraint::Rel::Gt, 0};
        pos.coeffs[i] = 1;
        cs.push_back(pos);
    }
    if (auto z = fm_solve(m, cs)) {
        r.admits = true;
        r.z = *z;
    }
    return r;
}

std::string exactness_name(Exactness e)
{
    switch (e) {
    case Exactness::WeinsteinCentered:
        return "weinstein_centered";
    case Exactness::NotExact:
        return "not_exact";
    case Exactness::Inconclusive:
        return "inconclusive";
    }
    return "";
}

ExactnessVerdict exactness_verdict(const SmoothingSpec& spec)
{
    const std::vector<std::size_t> sm = normalized_vertices(spec);
    ExactnessVerdict out;
    out.rays = center_check(spec.polytope, sm);
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, verdict::Centered>) {
                out.kind = Exactness::WeinsteinCentered;
                out.center = v.point;
                out.reason = "rays meet at an interior point";
            } else if constexpr (std::is_same_v<T, verdict::ParallelRays>) {
                out.kind = Exactness::NotExact;
                out.case_number = 1;
                out.reason = "rays of vertices " + std::to_string(v.i) + " and " + std::to_string(v.j) +
                             " are parallel";
            } else if constexpr (std::is_same_v<T, verdict::ThreeRayFailure>) {
                out.kind = Exactness::NotExact;
                out.case_number = 2;
                out.reason = "rays of vertices " + std::to_string(v.j) + " and " + std::to_string(v.k) +
                             " meet inside, off the ray of vertex " + std::to_string(v.i);
            } else if constexpr (std::is_same_v<T, verdict::NoIntersection>) {
                out.kind = Exactness::Inconclusive;
                out.case_number = 3;
                out.reason = "rays of vertices " + std::to_string(v.i) + " and " + std::to_string(v.j) +
                             " do not meet";
            } else {
                out.kind = Exactness::Inconclusive;
                out.case_number = 4;
                out.center = v.point;
                out.reason = "rays meet at " + to_string(v.point.x) + "," + to_string(v.point.y) +
                             ", not in the interior";
            }
        },
        out.rays);
    if (out.kind == Exactness::Inconclusive) {
        DivisorComponents dc = divisor_components(spec);
        out.concave = concave_obstruction(dc.Q, dc.areas);
    }
    return out;
}

}  // namespace twd
