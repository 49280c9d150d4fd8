#include "../support.hpp"

#include <doctest.h>

using namespace twd;
using namespace twd::testing;

TEST_CASE("standard polygons validate")
{
    CHECK(validate(polytopes::cp2(1)).ok());
    CHECK(validate(polytopes::cp1xcp1(2, Rational(1, 3))).ok());
    CHECK(validate(octagon()).ok());
}

TEST_CASE("validation catches bad input")
{
    HalfSpacePolytope nonprimitive{{{{2, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, -1}}};
    CHECK_FALSE(validate(nonprimitive).ok());
    HalfSpacePolytope nonsmooth{{{{1, 0}, 0}, {{-1, 2}, 0}, {{0, -1}, -1}}};
    CHECK_FALSE(validate(nonsmooth).ok());
    HalfSpacePolytope empty{{{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 1}}};
    CHECK_FALSE(validate(empty).ok());
    CHECK_THROWS_AS(require_valid(empty), DomainError);
}

TEST_CASE("vertices and edges of the triangle")
{
    auto p = polytopes::cp2(3);
    auto vs = vertices(p);
    REQUIRE(vs.size() == 3);
    CHECK(vs[0].position == RatVec2{0, 0});
    auto es = edges(p);
    for (const Edge& e : es) {
        CHECK(e.lattice_length == 3);
        CHECK(e.self_intersection == 1);
    }
}

TEST_CASE("rectangle self-intersections are zero")
{
    for (const Int& s : self_intersections(polytopes::cp1xcp1(2, 5)))
        CHECK(s == 0);
}

TEST_CASE("blow-up adds a -1 edge")
{
    auto p = blow_up(polytopes::cp2(3), 0, 1);
    REQUIRE(p.size() == 4);
    CHECK(validate(p).ok());
    auto s = self_intersections(p);
    CHECK(s[1] == -1);
    CHECK(edges(p)[1].lattice_length == 1);
    CHECK_THROWS_AS(blow_up(polytopes::cp2(1), 0, 2), DomainError);
}

TEST_CASE("sl2z and translation preserve edge data")
{
    std::mt19937 rng(8);
    for (int k = 0; k < 50; ++k) {
        bool mono = false;
        HalfSpacePolytope p = random_polytope(rng, mono);
        REQUIRE(validate(p).ok());
        HalfSpacePolytope q = translate(apply_sl2z(p, random_sl2z(rng)), {Rational(1, 3), -2});
        REQUIRE(validate(q).ok());
        auto ep = edges(p), eq = edges(q);
        REQUIRE(ep.size() == eq.size());
        for (std::size_t i = 0; i < ep.size(); ++i) {
            CHECK(ep[i].lattice_length == eq[i].lattice_length);
            CHECK(ep[i].self_intersection == eq[i].self_intersection);
        }
    }
}

TEST_CASE("strict interior")
{
    auto p = polytopes::cp1xcp1(2, 2);
    CHECK(strictly_inside(p, {1, 1}));
    CHECK_FALSE(strictly_inside(p, {0, 1}));
    CHECK_FALSE(strictly_inside(p, {3, 1}));
}
