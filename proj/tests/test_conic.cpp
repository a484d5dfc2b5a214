#include <doctest.h>

#include "resq/conic.hpp"
#include "resq/pell.hpp"

using namespace resq;

TEST_CASE("conic_C normal forms")
{
    CHECK(conic_C({1, 0, -1}) == TernaryConic{Int(1), Int(0), Int(-4), Int(-1)});
    CHECK(conic_C({1, 1, 1}) == TernaryConic{Int(1), Int(0), Int(3), Int(1)});
    CHECK(conic_C({2, 1, 2}) == TernaryConic{Int(1), Int(0), Int(15), Int(2)});
}

TEST_CASE("general conic family for cubics")
{
    const QuadTriple q{1, 2, 3};
    const auto c12 = conic_Cij(q, 3, {1, 2});
    CHECK(c12 == TernaryConic{Int(3), Int(-2), Int(1), Int(9)});

    const auto c13 = conic_Cij(q, 3, {1, 3});
    CHECK(c13 == TernaryConic{Int(9), Int(-2), Int(1), Int(3)}); // b^2-2ac = -2

    const auto c14 = conic_Cij(q, 3, {1, 4});
    // middle: -(b^3 - 3abc) = -(8 - 18) = 10
    CHECK(c14 == TernaryConic{Int(27), Int(10), Int(1), Int(1)});

    // The three integer-variable equations carry the same quadratic part; the
    // right-hand sides differ from the projective normalization by the square
    // factors b^2 and (b^2 - ac)^2 respectively.
    for (const QuadTriple t : {QuadTriple{1, 2, 3}, {2, -3, 5}, {-1, 4, 7}}) {
        const auto eqs = cubic_conics(t);
        const auto k12 = conic_Cij(t, 3, {1, 2});
        const auto k13 = conic_Cij(t, 3, {1, 3});
        const auto k14 = conic_Cij(t, 3, {1, 4});
        CHECK(eqs[0].q1 == k12.q1);
        CHECK(eqs[0].q2 == k12.q2);
        CHECK(eqs[0].q3 == k12.q3);
        CHECK(eqs[0].n == k12.m);
        CHECK(eqs[1].q1 == k13.q1);
        CHECK(eqs[1].q2 == k13.q2);
        CHECK(eqs[1].q3 == k13.q3);
        CHECK(eqs[1].n == Int(t.b) * t.b * k13.m);
        CHECK(eqs[2].q1 == k14.q1);
        CHECK(eqs[2].q2 == k14.q2);
        CHECK(eqs[2].q3 == k14.q3);
        const Int e = Int(t.b) * t.b - Int(t.a) * t.c;
        CHECK(eqs[2].n == e * e * k14.m);
    }

    CHECK_THROWS_AS(conic_Cij(q, 4, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(conic_Cij(q, 3, {2, 2}), std::invalid_argument);
}

TEST_CASE("rational point decision")
{
    auto dec = [](long long d, long long c) {
        return has_rational_point(TernaryConic{Int(1), Int(0), Int(-d), Int(c)});
    };
    CHECK(dec(5, 4));        // (3,1,1)
    CHECK_FALSE(dec(-3, -1));// definite with no real point
    CHECK_FALSE(dec(2, 3));  // 3-adic obstruction
    CHECK(dec(0, 7));        // (0,1,0)
    CHECK(dec(9, 7));        // split
    CHECK(dec(-4, 1));       // x^2+4y^2=z^2
    CHECK_THROWS_AS(dec(5, 0), std::domain_error);
    CHECK_THROWS_AS(has_rational_point(TernaryConic{Int(2), Int(0), Int(1), Int(1)}),
                    std::invalid_argument);
}

TEST_CASE("sieve membership")
{
    CHECK(omega_member({1, 1, 1}));       // disc -3, (1/3) = 1
    CHECK_FALSE(omega_member({2, 1, 2})); // disc -15, (2/3) = -1
    CHECK(omega_member({1, 0, -2}));      // disc 8 = 2^3, vacuous
    CHECK(omega_member({1, 2, 1}));       // disc 0
    CHECK(omega_member({0, 3, 5}));       // disc 9, square
}

TEST_CASE("bounded point search")
{
    auto fp = [](long long d, long long c, long long h) {
        return find_point(TernaryConic{Int(1), Int(0), Int(-d), Int(c)}, h);
    };
    SUBCASE("frozen examples")
    {
        auto p = fp(5, 4, 10);
        REQUIRE(p.has_value());
        CHECK(*p == ConicPoint{3, 1, 1});

        CHECK_FALSE(fp(2, 3, 1000).has_value());

        auto split = fp(4, 7, 10);
        REQUIRE(split.has_value());
        CHECK(*split == ConicPoint{2, 1, 0});

        auto degenerate = fp(0, 7, 10);
        REQUIRE(degenerate.has_value());
        CHECK(*degenerate == ConicPoint{0, 1, 0});
    }
    SUBCASE("found points satisfy the conic")
    {
        for (long long d = -6; d <= 6; ++d) {
            for (long long c = -4; c <= 4; ++c) {
                if (c == 0) {
                    continue;
                }
                const TernaryConic conic{Int(1), Int(0), Int(-d), Int(c)};
                auto p = find_point(conic, default_point_height(conic));
                if (!p) {
                    continue;
                }
                CHECK(p->y != 0);
                CHECK(Int(p->x) * p->x - Int(d) * p->y * p->y == Int(c) * p->z * p->z);
            }
        }
    }
    SUBCASE("decision agrees with search on a small box")
    {
        for (long long a = -3; a <= 3; ++a) {
            for (long long b = -3; b <= 3; ++b) {
                for (long long c = -3; c <= 3; ++c) {
                    if (a == 0 || b == 0 || c == 0) {
                        continue;
                    }
                    const QuadTriple q{a, b, c};
                    const auto conic = conic_C(q);
                    const bool decided = has_rational_point(conic);
                    const bool found =
                        find_point(conic, default_point_height(conic)).has_value();
                    CHECK(decided == found);
                    if (decided) {
                        CHECK(omega_member(q));
                    }
                }
            }
        }
    }
    SUBCASE("general-form search")
    {
        // 3x^2 - 2xy + y^2 = 9z^2, soluble: (2,1,1) gives 12 - 4 + 1 = 9.
        const TernaryConic conic{Int(3), Int(-2), Int(1), Int(9)};
        auto p = find_point(conic, 50);
        REQUIRE(p.has_value());
        CHECK(Int(3) * p->x * p->x - Int(2) * p->x * p->y + Int(p->y) * p->y
              == Int(9) * p->z * p->z);
    }
}

TEST_CASE("witness points from unit resultants")
{
    SUBCASE("x^3 - 2 against (1,1,1)")
    {
        const auto w = witness_point_from_resultant(poly_from({1, 0, 0, -2}), {1, 1, 1});
        REQUIRE(w.has_value());
        CHECK_FALSE(w->negated);
        CHECK(w->conic == TernaryConic{Int(1), Int(0), Int(3), Int(1)});
        CHECK(w->point[0] * w->point[0] + 3 * w->point[1] * w->point[1]
              == w->point[2] * w->point[2]);
        CHECK(w->point == std::array<Int, 3>{Int(1), Int(0), Int(1)});
    }
    SUBCASE("x^3 + x + 1 against (1,0,1)")
    {
        const auto w = witness_point_from_resultant(poly_from({1, 0, 1, 1}), {1, 0, 1});
        REQUIRE(w.has_value());
        CHECK(w->conic == TernaryConic{Int(1), Int(0), Int(4), Int(1)});
        CHECK(w->point[0] * w->point[0] + 4 * w->point[1] * w->point[1]
              == w->point[2] * w->point[2]);
    }
    SUBCASE("the monomial family c = 1")
    {
        for (long long a = -3; a <= 3; ++a) {
            for (long long b = -3; b <= 3; ++b) {
                const QuadTriple q{a, b, 1};
                const auto w = witness_point_from_resultant(poly_from({1, 0, 0, 0}), q);
                REQUIRE(w.has_value());
                const Int d(q.disc());
                CHECK(w->point[0] * w->point[0] - d * w->point[1] * w->point[1]
                      == Int(w->used.c) * w->point[2] * w->point[2]);
            }
        }
    }
    SUBCASE("negative resultant reduces by negation")
    {
        const QuadTriple q{2, 3, -1};
        CHECK(resultant(poly_from({1, 0, 0, 0}), q) == -1);
        const auto w = witness_point_from_resultant(poly_from({1, 0, 0, 0}), q);
        REQUIRE(w.has_value());
        CHECK(w->negated);
        CHECK(w->used == QuadTriple{-2, -3, 1});
        const Int d(w->used.disc());
        CHECK(d == 17);
        CHECK(w->point[0] * w->point[0] - d * w->point[1] * w->point[1]
              == Int(w->used.c) * w->point[2] * w->point[2]);
    }
    SUBCASE("rejects non-unit resultants and even degrees")
    {
        CHECK_THROWS_AS(witness_point_from_resultant(poly_from({1, 0, 0, 0}), {1, 1, 2}),
                        std::domain_error);
        CHECK_THROWS_AS(witness_point_from_resultant(poly_from({1, 0, 0}), {1, 1, 1}),
                        std::invalid_argument);
    }
    SUBCASE("degenerate c = 0 is reported, not guessed")
    {
        // Res(x^3 + x + 1, x^2 + x) = -1 but both clearing systems degenerate.
        const QuadTriple q{1, 1, 0};
        CHECK(resultant(poly_from({1, 0, 1, 1}), q) == -1);
        CHECK_FALSE(witness_point_from_resultant(poly_from({1, 0, 1, 1}), q).has_value());
    }
}
