#include <doctest.h>

#include <random>
#include <set>

#include "resq/ntheory.hpp"

using namespace resq;

TEST_CASE("factorization basics")
{
    const auto f = factor(60);
    CHECK(f.sign == 1);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<unsigned long long, int>{2, 2});
    CHECK(f.factors[1] == std::pair<unsigned long long, int>{3, 1});
    CHECK(f.factors[2] == std::pair<unsigned long long, int>{5, 1});
    CHECK(f.to_string() == "2^2 * 3 * 5");

    const auto g = factor(-15);
    CHECK(g.sign == -1);
    CHECK(g.factors.size() == 2);
    CHECK(g.valuation(3) == 1);
    CHECK(g.valuation(5) == 1);
    CHECK(g.valuation(7) == 0);

    CHECK(factor(1).factors.empty());
    CHECK(factor(-1).sign == -1);
    CHECK_THROWS_AS(factor(0), std::domain_error);

    // disc of (2,1,2) is 1 - 16 = -15.
    const auto d = factor(1 - 16);
    CHECK(d.valuation(3) == 1);
    CHECK(d.valuation(5) == 1);
}

TEST_CASE("factorization round-trips on random inputs")
{
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    int done = 0;
    while (done < 2000) {
        const long long n = dist(rng);
        if (n == 0) {
            continue;
        }
        const auto f = factor(n);
        CHECK(f.reconstruct() == n);
        for (const auto& [p, e] : f.factors) {
            CHECK(is_prime(p));
            CHECK(e >= 1);
        }
        for (std::size_t t = 1; t < f.factors.size(); ++t) {
            CHECK(f.factors[t - 1].first < f.factors[t].first);
        }
        ++done;
    }
    // A few 64-bit-hard composites for the rho path.
    CHECK(factor(1000003LL * 1000033LL).factors.size() == 2);
    CHECK(factor(2147483647LL * 65537LL).reconstruct() == 2147483647LL * 65537LL);
}

TEST_CASE("primality")
{
    CHECK(is_prime(2ull));
    CHECK(is_prime(3ull));
    CHECK_FALSE(is_prime(1ull));
    CHECK_FALSE(is_prime(561ull)); // Carmichael
    CHECK(is_prime(1000000007ull));
    CHECK(is_prime(18446744073709551557ull)); // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551615ull));

    // Cross-check against the sieve table.
    const auto& primes = small_primes();
    std::size_t t = 0;
    for (unsigned n = 2; n < 10000; ++n) {
        const bool in_table = t < primes.size() && primes[t] == n;
        CHECK(is_prime(static_cast<unsigned long long>(n)) == in_table);
        if (in_table) {
            ++t;
        }
    }

    CHECK(is_prime(Int("340282366920938463463374607431768211507"))); // 2^128 + 51
    CHECK_FALSE(is_prime(Int("340282366920938463463374607431768211455")));
}

TEST_CASE("jacobi symbol")
{
    CHECK(jacobi(1, 3) == 1);
    CHECK(jacobi(2, 3) == -1);
    CHECK(jacobi(5, 5) == 0);
    CHECK(jacobi(-1, 7) == -1);
    CHECK(jacobi(7, 1) == 1);
    CHECK_THROWS_AS(jacobi(3, 4), std::domain_error);
    CHECK_THROWS_AS(jacobi(3, -5), std::domain_error);

    // Against exhaustive square testing mod p.
    for (unsigned long long p : {3ull, 5ull, 7ull, 11ull, 13ull, 97ull}) {
        std::vector<int> residue(p, 0);
        for (unsigned long long t = 1; t < p; ++t) {
            residue[t * t % p] = 1;
        }
        for (unsigned long long a = 0; a < p; ++a) {
            const int expect = (a == 0) ? 0 : (residue[a] != 0 ? 1 : -1);
            CHECK(jacobi(static_cast<long long>(a), static_cast<long long>(p)) == expect);
        }
    }
}

TEST_CASE("hilbert symbol basics")
{
    CHECK(hilbert_symbol(-1, -1, Place::infinity()) == -1);
    CHECK(hilbert_symbol(-1, 5, Place::infinity()) == 1);
    CHECK(hilbert_symbol(2, 3, Place::prime(3)) == -1);
    CHECK(hilbert_symbol(2, 3, Place::prime(2)) == -1);
    CHECK_THROWS_AS(hilbert_symbol(0, 3, Place::prime(3)), std::domain_error);
    CHECK_THROWS_AS(hilbert_symbol(1, 3, Place::prime(4)), std::domain_error);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> dist(-60, 60);
    for (int trial = 0; trial < 300; ++trial) {
        long long u = dist(rng), v = dist(rng), w = dist(rng);
        if (u == 0 || v == 0 || w == 0) {
            continue;
        }
        for (const Place pl :
             {Place::infinity(), Place::prime(2), Place::prime(3), Place::prime(5)}) {
            // Squares are trivial in the second slot.
            CHECK(hilbert_symbol(u, w * w, pl) == 1);
            // Symmetry.
            CHECK(hilbert_symbol(u, v, pl) == hilbert_symbol(v, u, pl));
            // Bimultiplicativity.
            CHECK(hilbert_symbol(u * v, w, pl)
                  == hilbert_symbol(u, w, pl) * hilbert_symbol(v, w, pl));
        }
    }
}

TEST_CASE("hilbert product formula over all places dividing 2uv")
{
    for (long long u = -50; u <= 50; ++u) {
        for (long long v = -50; v <= 50; ++v) {
            if (u == 0 || v == 0) {
                continue;
            }
            int prod = hilbert_symbol(u, v, Place::infinity());
            std::set<unsigned long long> places{2};
            for (const auto& [p, e] : factor(u).factors) {
                places.insert(p);
            }
            for (const auto& [p, e] : factor(v).factors) {
                places.insert(p);
            }
            for (unsigned long long p : places) {
                prod *= hilbert_symbol(u, v, Place::prime(p));
            }
            CHECK(prod == 1);
        }
    }
}
