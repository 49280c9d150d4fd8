#include "../support.hpp"

#include <doctest.h>

using namespace twd;
using namespace twd::testing;

TEST_CASE("parse_rational")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("x"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
}

TEST_CASE("bezout identity")
{
    std::mt19937 rng(1);
    for (int k = 0; k < 200; ++k) {
        Int a = uniform(rng, -50, 50), b = uniform(rng, -50, 50);
        if (a == 0 && b == 0)
            continue;
        Bezout z = bezout(a, b);
        CHECK(z.g == gcd(a, b));
        CHECK(z.g > 0);
        CHECK(z.p * a + z.q * b == z.g);
    }
}

TEST_CASE("angle order starts at (1,0)")
{
    std::vector<IntVec2> v{{0, -1}, {-1, 0}, {1, 1}, {1, 0}, {-1, -1}, {0, 1}};
    std::sort(v.begin(), v.end(), angle_less);
    std::vector<IntVec2> want{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
    CHECK(v == want);
}

TEST_CASE("UniMat2 group laws")
{
    std::mt19937 rng(2);
    for (int k = 0; k < 50; ++k) {
        UniMat2 g = random_sl2z(rng), h = random_sl2z(rng);
        CHECK(g * g.inverse() == UniMat2::identity());
        IntVec2 v = random_primitive(rng, 9);
        CHECK((g * h).apply(v) == g.apply(h.apply(v)));
        CHECK(g.apply(v).primitive());
    }
    CHECK_THROWS_AS(UniMat2(2, 0, 0, 1), DomainError);
}

TEST_CASE("smith normal form fixtures")
{
    IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    SmithForm s = smith_normal_form(m);
    CHECK(s.D == IntMatrix{{2, 0, 0}, {0, 6, 0}, {0, 0, 12}});
    CHECK(s.U * m * s.V == s.D);
    CHECK(s.rank == 3);

    CokerKer ck = coker_ker(IntMatrix{{0, 1, 0}, {0, 0, -1}});
    CHECK(ck.coker.is_trivial());
    CHECK(ck.ker_rank == 1);

    CokerKer z2 = coker_ker(IntMatrix{{2}});
    CHECK(z2.coker == AbelianGroup{0, {2}});
    CHECK(z2.coker.to_string() == "Z/2");
}

TEST_CASE("smith normal form properties")
{
    std::mt19937 rng(3);
    for (int k = 0; k < 300; ++k) {
        IntMatrix m(static_cast<std::size_t>(uniform(rng, 1, 4)), static_cast<std::size_t>(uniform(rng, 1, 4)));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = uniform(rng, -6, 6);
        SmithForm s = smith_normal_form(m);
        REQUIRE(is_unimodular(s.U));
        REQUIRE(is_unimodular(s.V));
        REQUIRE(s.U * m * s.V == s.D);
        REQUIRE(s.D.is_diagonal());
        std::size_t nz = 0;
        for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
            nz += s.D(i, i) != 0;
        CHECK(nz == s.rank);
        // Square case: |det| is the product of the invariant factors.
        if (m.rows() == m.cols()) {
            Int prod = 1;
            for (std::size_t i = 0; i < m.rows(); ++i)
                prod *= s.D(i, i);
            CHECK(abs(determinant(m)) == prod);
        }
    }
}

TEST_CASE("triangle census against Pick")
{
    std::mt19937 rng(4);
    for (int k = 0; k < 300; ++k) {
        IntVec2 v1{uniform(rng, -10, 10), uniform(rng, -10, 10)}, v2{uniform(rng, -10, 10), uniform(rng, -10, 10)};
        if (cross(v1, v2) == 0)
            continue;
        TriangleCensus c = triangle_lattice_census(v1, v2);
        PickCensus p = pick_census(static_cast<long long>(v1.x), static_cast<long long>(v1.y),
                                   static_cast<long long>(v2.x), static_cast<long long>(v2.y));
        CHECK(c.interior == p.interior);
        CHECK(c.boundary == p.boundary);
        for (const IntVec2& q : c.primitive_points)
            CHECK(q.primitive());
    }
    CHECK_THROWS_AS(triangle_lattice_census({1, 1}, {2, 2}), DomainError);
}

TEST_CASE("z2 basis")
{
    CHECK(is_z2_basis({1, 0}, {0, 1}));
    CHECK(is_z2_basis({2, 1}, {1, 1}));
    CHECK_FALSE(is_z2_basis({2, 0}, {0, 1}));
}
