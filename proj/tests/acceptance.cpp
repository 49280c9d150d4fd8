#include "support.hpp"

#include "twd/front.hpp"
#include "twd/words.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace twd;
using namespace twd::testing;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    /// Largest single-fixture time when the bound is per fixture.
    double per_item_ms = -1;
};

struct Criterion {
    int id;
    const char* name;
    /// Wall-clock bound in milliseconds; 0 means untimed.
    double budget_ms;
    bool per_item;
    std::function<Outcome()> run;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void fail(Outcome& o, const std::string& why)
{
    if (o.ok)
        o.detail = why;
    o.ok = false;
}

AbelianGroup Z(std::size_t r, std::vector<Int> t = {}) { return {r, std::move(t)}; }

Outcome fan_fixture()
{
    Outcome o;
    Fan2D f = complete_fan({{3, 2}, {1, 3}});
    Fan2D want{{{3, 2}, {1, 1}, {1, 2}, {1, 3}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}, {2, 1}}};
    if (!(f == want))
        fail(o, "got " + std::to_string(f.rays.size()) + " rays");
    else
        o.detail = "9 rays";
    return o;
}

Outcome tb_table()
{
    Outcome o;
    std::size_t pairs = 0;
    for (long long a = -6; a <= 6; ++a)
        for (long long b = -6; b <= 6; ++b) {
            if (std::gcd(std::llabs(a), std::llabs(b)) != 1)
                continue;
            ++pairs;
            // Independent closed form, written out here rather than taken from the library.
            long long want = b >= 0 ? -2 * b * b - std::llabs(a * b) : a * b;
            FrontDiagram d = generate_diagram({{a, b}});
            Int got = tb_of(d, 1);
            if (got != want)
                fail(o, "(" + std::to_string(a) + "," + std::to_string(b) + "): tb " + to_string(got) +
                            " != " + std::to_string(want));
        }
    if (o.ok)
        o.detail = std::to_string(pairs) + " coprime pairs";
    return o;
}

Outcome homology_fixtures()
{
    struct Fx {
        const char* name;
        SlopeSet c;
        AbelianGroup h1, h2;
    };
    const Fx fx[] = {
        {"{(1,0)}", {{1, 0}}, Z(1), Z(1)},
        {"{(1,0),(0,-1)}", {{1, 0}, {0, -1}}, Z(0), Z(1)},
        {"{(1,0),(-1,0)}", {{1, 0}, {-1, 0}}, Z(1), Z(2)},
        {"{(1,0),(-1,0),(1,-2)}", {{1, 0}, {-1, 0}, {1, -2}}, Z(0, {2}), Z(2)},
        {"4-node CP1xCP1", {{1, 0}, {-1, 0}, {1, -2}, {-1, 2}}, Z(0, {2}), Z(3)},
        {"cubic", {{0, -1}, {-3, 2}, {3, -1}}, Z(0, {3}), Z(2)},
        {"octagon", octagon_slopes(), Z(0), Z(7)},
    };
    Outcome o;
    o.per_item_ms = 0;
    for (const Fx& f : fx) {
        auto t0 = Clock::now();
        WHomology w = homology_W(f.c);
        XHomology x = homology_X(generate_diagram(f.c));
        o.per_item_ms = std::max(o.per_item_ms, ms_since(t0));
        if (!(w.H1 == f.h1 && w.H2 == f.h2))
            fail(o, std::string(f.name) + ": W gives " + w.H1.to_string() + ", " + w.H2.to_string());
        if (!(x.H1 == f.h1 && x.H2 == f.h2))
            fail(o, std::string(f.name) + ": X gives " + x.H1.to_string() + ", " + x.H2.to_string());
    }
    if (o.ok)
        o.detail = "7 fixtures, W and diagram agree";
    return o;
}

Outcome end_to_end()
{
    Outcome o;
    std::mt19937 rng(20240601);
    for (int k = 0; k < 100; ++k) {
        SlopeSet c = random_slopes(rng, 4, 5);
        XHomology x = homology_X(generate_diagram(c));
        WHomology w = homology_W(c);
        if (!(x.H1 == w.H1 && x.H2 == w.H2))
            fail(o, "case " + std::to_string(k) + ": " + x.H1.to_string() + " vs " + w.H1.to_string());
    }
    BoundaryHomology b = boundary_homology(canonical_closure(gompf_base({1, true})));
    if (!(b.H1 == Z(3)))
        fail(o, "empty closure H1 = " + b.H1.to_string());
    if (o.ok)
        o.detail = "100 random sets; empty closure H1 = " + b.H1.to_string();
    return o;
}

bool all_centered(const HalfSpacePolytope& p) { return is_centered(center_check(p, all_vertices(p))); }

Outcome centeredness()
{
    Outcome o;
    HalfSpacePolytope cp2 = polytopes::cp2(3);
    HalfSpacePolytope b1 = blow_up(cp2, 0, 1);
    HalfSpacePolytope b2 = blow_up(b1, 2, 1);
    HalfSpacePolytope b3 = blow_up(b2, 4, 1);
    const std::pair<const char*, HalfSpacePolytope> named[] = {
        {"CP2", cp2}, {"CP1xCP1", polytopes::cp1xcp1(2, 2)}, {"CP2#1", b1}, {"CP2#2", b2}, {"CP2#3", b3}};
    for (const auto& [name, p] : named)
        if (!all_centered(p) || !is_monotone(p))
            fail(o, std::string(name) + " not centered");
    std::mt19937 rng(7);
    int mono = 0;
    for (int k = 0; k < 200; ++k) {
        bool by_construction = false;
        HalfSpacePolytope p = random_polytope(rng, by_construction);
        bool m = is_monotone(p);
        mono += m;
        if (by_construction && !m)
            fail(o, "case " + std::to_string(k) + " lost monotonicity");
        if (m != all_centered(p))
            fail(o, "case " + std::to_string(k) + ": monotone " + std::to_string(m));
    }
    if (o.ok)
        o.detail = "5 named; 200 random (" + std::to_string(mono) + " monotone)";
    return o;
}

Outcome obstructions()
{
    Outcome o;
    HalfSpacePolytope oct = octagon();
    ExactnessVerdict v = exactness_verdict({oct, all_vertices(oct)});
    if (v.kind != Exactness::NotExact || v.case_number != 1)
        fail(o, "octagon: " + exactness_name(v.kind) + " case " + std::to_string(v.case_number));
    std::mt19937 rng(11);
    for (int k = 0; k < 20; ++k) {
        Rational a(uniform(rng, 2, 40), uniform(rng, 1, 7));
        Rational b = a / 2 * Rational(uniform(rng, 1, 10), 10);
        DivisorComponents dc = divisor_components({polytopes::cp1xcp1(a, b), {0, 1}});
        ConcaveResult r = concave_obstruction(dc.Q, dc.areas);
        Rational z1 = (2 * b - a) / 2;
        if (r.admits)
            fail(o, "rectangle " + to_string(a) + "x" + to_string(b) + " admits");
        else if (!r.affine_solution || (*r.affine_solution)[0] != z1)
            fail(o, "rectangle " + to_string(a) + "x" + to_string(b) + ": z1 mismatch");
    }
    if (o.ok)
        o.detail = "octagon case 1; 20 rectangles with z1 = (2b-a)/2 <= 0";
    return o;
}

bool maps_to(const UniMat2& g, const SlopeSet& c1, SlopeSet c2)
{
    if (c1.size() != c2.size())
        return false;
    for (const IntVec2& v : c1) {
        auto it = std::find(c2.begin(), c2.end(), g.apply(v));
        if (it == c2.end())
            return false;
        c2.erase(it);
    }
    return true;
}

Outcome sl2z()
{
    Outcome o;
    const SlopeSet c1{{1, -1}, {1, 2}}, c2{{1, 2}, {-2, -1}}, c3{{-2, -1}, {1, -1}};
    // All witnesses for each pair differ by the finite stabilizer of c1, so
    // a matrix other than the printed one is accepted once it is verified.
    const UniMat2 m12(0, -1, 1, -1), m13(-1, 1, -1, 0);
    for (auto [target, printed] : {std::pair{c2, m12}, std::pair{c3, m13}}) {
        auto g = sl2z_equivalent(c1, target);
        if (!g || !maps_to(*g, c1, target) || !maps_to(printed, c1, target))
            fail(o, "example witness not recovered");
    }
    if (sl2z_equivalent({{1, -1}, {3, 1}}, {{4, 1}, {0, 1}}))
        fail(o, "{(1,-1),(3,1)} ~ {(4,1),(0,1)} claimed");
    std::mt19937 rng(3);
    const SlopeSet anchor{{1, 0}, {0, -1}};
    for (int k = 0; k < 100; ++k) {
        auto [u, v] = random_det1_pair(rng);
        SlopeSet c = uniform(rng, 0, 1) ? SlopeSet{u, v} : SlopeSet{v, u};
        auto g = sl2z_equivalent(c, anchor);
        if (!g || !maps_to(*g, c, anchor))
            fail(o, "unimodular pair " + to_string(u) + "," + to_string(v) + " not equivalent to anchor");
    }
    if (o.ok)
        o.detail = "2 witnesses, 1 inequivalent pair, 100 unimodular pairs";
    return o;
}

Outcome constructors()
{
    Outcome o;
    std::mt19937 rng(5);
    for (int k = 0; k < 100; ++k) {
        auto [u, v] = random_det1_pair(rng);
        HalfSpacePolytope p = centered_pair(u, v);
        if (!validate(p).ok() || !is_centered(center_check(p, {0, 1})) || slope_at(p, 0) != u ||
            slope_at(p, 1) != v)
            fail(o, "centered_pair " + to_string(u) + "," + to_string(v));
    }
    for (unsigned k = 1; k <= 10; ++k) {
        CenteredFamily f = centered_family(k);
        if (!validate(f.polytope).ok() || !is_centered(center_check(f.polytope, f.vertices)))
            fail(o, "centered_family(" + std::to_string(k) + ")");
    }
    if (o.ok)
        o.detail = "100 pairs, k = 1..10";
    return o;
}

IntMatrix random_matrix(std::mt19937& rng)
{
    IntMatrix m(static_cast<std::size_t>(uniform(rng, 1, 5)), static_cast<std::size_t>(uniform(rng, 1, 5)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = uniform(rng, -9, 9);
    return m;
}

bool snf_ok(const IntMatrix& M)
{
    SmithForm s = smith_normal_form(M);
    if (!is_unimodular(s.U) || !is_unimodular(s.V) || !(s.U * M * s.V == s.D) || !s.D.is_diagonal())
        return false;
    std::size_t n = std::min(M.rows(), M.cols());
    for (std::size_t i = 0; i < n; ++i) {
        if (s.D(i, i) < 0)
            return false;
        if (i + 1 < n && s.D(i, i) == 0 && s.D(i + 1, i + 1) != 0)
            return false;
        if (i + 1 < n && s.D(i, i) != 0 && s.D(i + 1, i + 1) % s.D(i, i) != 0)
            return false;
    }
    return true;
}

Outcome properties()
{
    Outcome o;
    std::mt19937 rng(99);
    for (int k = 0; k < 1000; ++k) {
        IntVec2 v1 = random_primitive(rng, 12), v2 = random_primitive(rng, 12);
        v1 = Int(uniform(rng, 1, 3)) * v1;
        if (cross(v1, v2) == 0)
            continue;
        TriangleCensus c = triangle_lattice_census(v1, v2);
        PickCensus want = pick_census(static_cast<long long>(v1.x), static_cast<long long>(v1.y),
                                      static_cast<long long>(v2.x), static_cast<long long>(v2.y));
        if (c.interior != want.interior || c.boundary != want.boundary)
            fail(o, "Pick at " + to_string(v1) + "," + to_string(v2));
    }
    for (int k = 0; k < 1000; ++k)
        if (!snf_ok(random_matrix(rng)))
            fail(o, "SNF case " + std::to_string(k));
    for (int k = 0; k < 1000; ++k) {
        SlopeSet c = random_slopes(rng, 3, 3);
        DiagramOptions opt{true, uniform(rng, 0, 1) == 1};
        FrontDiagram raw = generate_diagram(c, {false, opt.move6});
        FrontDiagram norm = generate_diagram(c, opt);
        ClosedFrontDiagram cr = canonical_closure(raw), cn = canonical_closure(norm);
        for (const FrontDiagram* d : {&raw, &norm, &cr.diagram, &cn.diagram})
            if (!validate(*d).ok())
                fail(o, "ill-formed diagram in case " + std::to_string(k));
        IntMatrix lr = linking_matrix(cr), ln = linking_matrix(cn);
        if (!lr.is_symmetric() || !ln.is_symmetric())
            fail(o, "asymmetric linking matrix in case " + std::to_string(k));
        if (!(lr == ln))
            fail(o, "linking changes with bigon removal in case " + std::to_string(k));
        for (std::size_t j = 0; j < raw.components.size(); ++j)
            if (tb_of(raw, j) != tb_of(norm, j))
                fail(o, "tb changes with bigon removal in case " + std::to_string(k));
    }
    if (o.ok)
        o.detail = "Pick, SNF and diagram suites, 1000 cases each";
    return o;
}

Outcome negative_search()
{
    Outcome o;
    if (search_centered({{1, 1}, {1, 2}, {-2, -1}, {0, -1}}))
        fail(o, "a witness was found");
    else
        o.detail = "no witness within the default budget (not a proof)";
    return o;
}

}  // namespace

int main()
{
    const Criterion criteria[] = {
        {1, "fan completion fixture", 1, false, fan_fixture},
        {2, "tb table over coprime pairs |a|,|b| <= 6", 5000, false, tb_table},
        {3, "homology fixtures", 10, true, homology_fixtures},
        {4, "end-to-end homology and empty closure", 30000, false, end_to_end},
        {5, "centeredness vs monotonicity", 10000, false, centeredness},
        {6, "obstruction fixtures", 0, false, obstructions},
        {7, "SL(2,Z) equivalence", 1000, false, sl2z},
        {8, "centered constructors", 20000, false, constructors},
        {9, "property suites", 60000, false, properties},
        {10, "negative search sanity", 0, false, negative_search},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        auto t0 = Clock::now();
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double t = ms_since(t0);
        double timed = c.per_item ? o.per_item_ms : t;
        bool in_time = c.budget_ms == 0 || timed < c.budget_ms;
        bool ok = o.ok && in_time;
        failed += !ok;
        std::string bound = c.budget_ms == 0 ? "untimed"
                                             : std::string(c.per_item ? "max item < " : "< ") +
                                                   std::to_string(static_cast<long long>(c.budget_ms)) + " ms";
        std::printf("[%s] %2d %s: %s (%.3f ms%s, %s)\n", ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), t,
                    c.per_item ? (", max item " + std::to_string(o.per_item_ms) + " ms").c_str() : "",
                    bound.c_str());
    }
    std::printf("%d/10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
