#include "../support.hpp"

#include <doctest.h>

using namespace twd;
using namespace twd::testing;

TEST_CASE("monotone triangle is centered at its barycenter")
{
    auto p = polytopes::cp2(3);
    auto v = center_check(p, {0, 1, 2});
    REQUIRE(is_centered(v));
    CHECK(std::get<verdict::Centered>(v).point == RatVec2{1, 1});
    CHECK(verdict_name(v) == "centered");
    CHECK(is_monotone(p));
}

TEST_CASE("slopes and rays")
{
    auto p = polytopes::cp2(1);
    // Vertex 0 joins normals (1,0) and (0,1).
    CHECK(slope_at(p, 0) == IntVec2{1, -1});
    Ray r = ray_at(p, 0);
    CHECK(cross(r.direction, slope_at(p, 0)) != 0);
    CHECK(dot(r.direction, slope_at(p, 0)) == 0);
}

TEST_CASE("verdict classes")
{
    auto rect = polytopes::cp1xcp1(4, 2);
    CHECK(verdict_name(center_check(rect, {0, 1, 2, 3})) == "parallel_rays");
    CHECK(!is_centered(center_check(rect, {0, 1})));
    CHECK(is_centered(center_check(rect, {0})));
    CHECK(is_centered(center_check(polytopes::cp1xcp1(2, 2), {0, 1, 2, 3})));
    CHECK_FALSE(is_centered(center_check(octagon(), all_vertices(octagon()))));
}

TEST_CASE("lambda criterion agrees with center_check")
{
    std::mt19937 rng(21);
    for (int k = 0; k < 60; ++k) {
        bool mono = false;
        HalfSpacePolytope p = random_polytope(rng, mono);
        std::vector<std::size_t> chosen;
        for (std::size_t v = 0; v < p.size(); ++v)
            if (uniform(rng, 0, 1))
                chosen.push_back(v);
        if (chosen.empty())
            chosen.push_back(0);
        CenterVerdict v = center_check(p, chosen);
        auto t = lambda_center_criterion(p, chosen);
        REQUIRE(t.has_value() == is_centered(v));
        if (t) {
            HalfSpacePolytope q = translate(p, *t);
            for (std::size_t c : chosen)
                CHECK(q.facet(c).offset == q.facet(c + 1).offset);
            RatVec2 pt = std::get<verdict::Centered>(v).point;
            CHECK(pt.x + t->x == 0);
            CHECK(pt.y + t->y == 0);
        }
    }
}

TEST_CASE("monotone iff centered at all vertices")
{
    std::mt19937 rng(22);
    for (int k = 0; k < 100; ++k) {
        bool mono = false;
        HalfSpacePolytope p = random_polytope(rng, mono);
        CHECK(is_monotone(p) == is_centered(center_check(p, all_vertices(p))));
        if (mono)
            CHECK(is_monotone(p));
    }
}

TEST_CASE("centered_pair")
{
    auto p = centered_pair({1, 0}, {0, 1});
    CHECK(validate(p).ok());
    CHECK(is_centered(center_check(p, {0, 1})));
    CHECK_THROWS_AS(centered_pair({1, 0}, {1, 2}), DomainError);
}

TEST_CASE("centered_family")
{
    for (unsigned k = 1; k <= 6; ++k) {
        CenteredFamily f = centered_family(k);
        REQUIRE(f.vertices.size() == k + 2);
        CHECK(validate(f.polytope).ok());
        CHECK(is_centered(center_check(f.polytope, f.vertices)));
        CHECK(slope_at(f.polytope, f.vertices.front()) == IntVec2{0, -1});
        CHECK(slope_at(f.polytope, f.vertices.back()) == IntVec2{-1, -1});
        for (unsigned j = 1; j <= k; ++j)
            CHECK(slope_at(f.polytope, f.vertices[j]) == IntVec2{1, static_cast<long long>(j)});
    }
}

TEST_CASE("search_centered")
{
    auto w = search_centered({{1, -1}, {-1, 2}});
    REQUIRE(w.has_value());
    CHECK(is_centered(center_check(w->polytope, w->vertices)));
    CHECK(slope_at(w->polytope, w->vertices[0]) == IntVec2{1, -1});
    CHECK_FALSE(search_centered({{1, 1}, {1, 2}, {-2, -1}, {0, -1}}).has_value());
}
