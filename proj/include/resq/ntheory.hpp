#ifndef RESQ_NTHEORY_HPP
#define RESQ_NTHEORY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "resq/int_types.hpp"

namespace resq {

// sign * prod p^e with primes strictly increasing; every p is certified prime.
struct Factorization {
    int sign = 1;
    std::vector<std::pair<unsigned long long, int>> factors;

    int valuation(unsigned long long p) const;
    Int reconstruct() const;
    std::string to_string() const; // e.g. "-1 * 3 * 5"
};

// Shared read-only table of primes below 10^4, built once.
const std::vector<uint32_t>& small_primes();

// Deterministic for all 64-bit inputs (fixed Miller-Rabin witness set).
bool is_prime(unsigned long long n);
// Probable-prime test beyond 64 bits: 25 Miller-Rabin rounds via GMP.
bool is_prime(const Int& n);

// Trial division below 10^4, then Pollard-Brent rho. n must be nonzero;
// everything in scope fits in 64 bits.
Factorization factor(long long n);
Factorization factor(const Int& n);

// Jacobi symbol (a/n) for odd positive n; equals the Legendre symbol for
// prime n.
int jacobi(long long a, long long n);
int jacobi(const Int& a, const Int& n);

struct Place {
    bool infinite = false;
    unsigned long long p = 0;

    static Place infinity() { return {true, 0}; }
    static Place prime(unsigned long long p) { return {false, p}; }
};

// (u, v)_place = 1 iff Z^2 = u X^2 + v Y^2 has a nontrivial local solution.
int hilbert_symbol(long long u, long long v, const Place& place);

} // namespace resq

#endif
