#include "../support.hpp"

#include <doctest.h>

using namespace twd;
using namespace twd::testing;

namespace {
AbelianGroup Z(std::size_t r, std::vector<Int> t = {}) { return {r, std::move(t)}; }
}

TEST_CASE("homology_W fixtures")
{
    CHECK(homology_W({}).H1 == Z(2));
    CHECK(homology_W({{1, 0}}).H1 == Z(1));
    CHECK(homology_W({{1, 0}}).H2 == Z(1));
    CHECK(homology_W({{1, 0}, {0, -1}}).H1 == Z(0));
    CHECK(homology_W({{1, 0}, {-1, 0}}).H2 == Z(2));
    CHECK(homology_W({{1, 0}, {-1, 0}, {1, -2}}).H1 == Z(0, {2}));
    CHECK(homology_W({{1, 0}, {-1, 0}, {1, -2}, {-1, 2}}).H2 == Z(3));
    CHECK(homology_W({{0, -1}, {-3, 2}, {3, -1}}).H1 == Z(0, {3}));
    CHECK(homology_W(octagon_slopes()).H1 == Z(0));
    CHECK(homology_W(octagon_slopes()).H2 == Z(7));
}

TEST_CASE("slope matrix has a zero column for the base")
{
    IntMatrix m = slope_matrix({{2, -1}});
    CHECK(m == IntMatrix{{0, 2}, {0, -1}});
}

TEST_CASE("pi1 presentation abelianizes to H1")
{
    std::mt19937 rng(31);
    for (int k = 0; k < 50; ++k) {
        SlopeSet c = random_slopes(rng, 4, 5);
        WHomology w = homology_W(c);
        CHECK(coker_ker(w.pi1.abelianization()).coker == w.H1);
    }
}

TEST_CASE("tb formula")
{
    CHECK(tb_formula(1, 0) == 0);
    CHECK(tb_formula(0, 1) == -2);
    CHECK(tb_formula(1, -1) == -1);
    CHECK(tb_formula(-3, 2) == -14);
    CHECK(tb_formula(3, -1) == -3);
    CHECK_THROWS_AS(tb_formula(2, 2), DomainError);
}

TEST_CASE("sl2z_equivalent")
{
    const SlopeSet c1{{1, -1}, {1, 2}};
    auto g = sl2z_equivalent(c1, {{1, 2}, {-2, -1}});
    REQUIRE(g.has_value());
    CHECK(*g == UniMat2(0, -1, 1, -1));
    auto h = sl2z_equivalent(c1, {{-2, -1}, {1, -1}});
    REQUIRE(h.has_value());
    CHECK(*h == UniMat2(-1, 1, -1, 0));
    CHECK_FALSE(sl2z_equivalent({{1, -1}, {3, 1}}, {{4, 1}, {0, 1}}).has_value());
    CHECK_FALSE(sl2z_equivalent({{1, 0}}, {{1, 0}, {0, 1}}).has_value());
}

TEST_CASE("sl2z_equivalent finds planted transforms")
{
    std::mt19937 rng(32);
    for (int k = 0; k < 100; ++k) {
        SlopeSet c = random_slopes(rng, 4, 4);
        UniMat2 g = random_sl2z(rng);
        SlopeSet d;
        for (const IntVec2& v : c)
            d.push_back(g.apply(v));
        std::shuffle(d.begin(), d.end(), rng);
        auto h = sl2z_equivalent(c, d);
        REQUIRE(h.has_value());
        SlopeSet img;
        for (const IntVec2& v : c)
            img.push_back(h->apply(v));
        std::sort(img.begin(), img.end(), lex_less);
        std::sort(d.begin(), d.end(), lex_less);
        CHECK(img == d);
    }
}

TEST_CASE("divisor components of the rectangle")
{
    Rational a(7, 2), b(1, 2);
    DivisorComponents dc = divisor_components({polytopes::cp1xcp1(a, b), {0, 1}});
    CHECK(dc.Q == IntMatrix{{0, 2}, {2, 4}});
    REQUIRE(dc.areas.size() == 2);
    CHECK(dc.areas[0] == a);
    CHECK(dc.areas[1] == a + 2 * b);
    ConcaveResult r = concave_obstruction(dc.Q, dc.areas);
    CHECK_FALSE(r.admits);
    REQUIRE(r.affine_solution.has_value());
    CHECK((*r.affine_solution)[0] == (2 * b - a) / 2);
}

TEST_CASE("concave criterion admits a positive solution")
{
    ConcaveResult r = concave_obstruction(IntMatrix{{1}}, {Rational(3)});
    CHECK(r.admits);
    REQUIRE(r.z.size() == 1);
    CHECK(r.z[0] == 3);
}

TEST_CASE("exactness verdicts")
{
    auto oct = octagon();
    ExactnessVerdict v = exactness_verdict({oct, all_vertices(oct)});
    CHECK(v.kind == Exactness::NotExact);
    CHECK(v.case_number == 1);

    ExactnessVerdict c = exactness_verdict({polytopes::cp2(3), {2, 0, 1, 1}});
    CHECK(c.kind == Exactness::WeinsteinCentered);
    CHECK(c.center == RatVec2{1, 1});

    ExactnessVerdict r = exactness_verdict({polytopes::cp1xcp1(4, 1), {0, 1}});
    CHECK(r.kind == Exactness::Inconclusive);
    CHECK(r.concave.has_value());

    CHECK_THROWS_AS(exactness_verdict({polytopes::cp2(1), {3}}), DomainError);
}

TEST_CASE("normalized vertices")
{
    CHECK(normalized_vertices({polytopes::cp2(1), {2, 0, 2}}) == std::vector<std::size_t>{0, 2});
    CHECK(slopes_of({polytopes::cp2(1), {0}}) == SlopeSet{{1, -1}});
}
