#include "../support.hpp"

#include <doctest.h>

using namespace twd;
using namespace twd::testing;

TEST_CASE("fan completion fixture")
{
    Fan2D f = complete_fan({{3, 2}, {1, 3}});
    std::vector<IntVec2> want{{3, 2}, {1, 1}, {1, 2}, {1, 3}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}, {2, 1}};
    CHECK(f.rays == want);
    CHECK(f.is_complete());
    CHECK(f.is_regular());
}

TEST_CASE("completed fans are regular and keep their inputs")
{
    std::mt19937 rng(12);
    for (int k = 0; k < 200; ++k) {
        SlopeSet in = random_slopes(rng, 4, 7);
        std::sort(in.begin(), in.end(), lex_less);
        in.erase(std::unique(in.begin(), in.end()), in.end());
        Fan2D f = complete_fan(in);
        REQUIRE(f.is_complete());
        REQUIRE(f.is_regular());
        for (const IntVec2& v : in)
            CHECK(std::find(f.rays.begin(), f.rays.end(), v) != f.rays.end());
        for (std::size_t i = 0; i < f.rays.size(); ++i)
            CHECK(cross(f.rays[i], f.rays[(i + 1) % f.rays.size()]) == 1);
    }
}

TEST_CASE("blow-up chain")
{
    Fan2D f = complete_fan({{1, 0}});
    Fan2D g = blow_up_chain(f, {1, 0}, 2);
    CHECK(g.is_regular());
    CHECK(g.rays.size() == f.rays.size() + 2);
}

TEST_CASE("polytope from fan has the fan's normals")
{
    Fan2D f = complete_fan({{3, 2}, {1, 3}});
    HalfSpacePolytope p = polytope_from_fan(f);
    CHECK(validate(p).ok());
    CHECK(fan_of(p) == f);
}

TEST_CASE("realize_slopes provides the requested vertex slopes")
{
    std::mt19937 rng(13);
    for (int k = 0; k < 100; ++k) {
        SlopeSet want = random_slopes(rng, 4, 4);
        HalfSpacePolytope p = realize_slopes(want);
        REQUIRE(validate(p).ok());
        SlopeSet have;
        for (std::size_t v = 0; v < p.size(); ++v)
            have.push_back(slope_at(p, v));
        for (const IntVec2& s : want) {
            auto it = std::find(have.begin(), have.end(), s);
            REQUIRE(it != have.end());
            have.erase(it);
        }
    }
}

TEST_CASE("zero vector is rejected")
{
    CHECK_THROWS_AS(complete_fan({{0, 0}}), DomainError);
    CHECK_THROWS_AS(complete_fan({{2, 2}}), DomainError);
    CHECK_THROWS_AS(complete_fan({{1, 2}, {1, 2}}), DomainError);
}
