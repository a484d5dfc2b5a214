#ifndef RESQ_SIEVE_HPP
#define RESQ_SIEVE_HPP

#include <string>
#include <vector>

#include "resq/int_types.hpp"

namespace resq {

// Exact local data at an odd prime p: s_p counts the residue triples
// (a, b, c) mod p^2 whose discriminant has p-valuation exactly 1 while c is a
// non-residue mod p; those are the classes the solubility sieve excludes.
// omega_p = s_p / p^6 and omega_residues = p^6 - s_p.
struct LocalDensity {
    unsigned long p = 0;
    unsigned long long s_p = 0;
    Rat omega_p;
    unsigned long long omega_residues = 0;
};

// Full enumeration of (Z/p^2 Z)^3. Exact for odd primes p <= 13; p = 2 is
// rejected (the valuation-1 condition is vacuous there) and larger p are
// rejected on cost grounds.
LocalDensity local_density(unsigned long p);

// Count of box triples |a| <= b1, |b| <= b2, |c| <= b3 (zeros included)
// passing the sieve condition.
unsigned long long count_T(long long b1, long long b2, long long b3,
                           unsigned jobs = 1);

// Count of triples 0 < |a|,|b|,|c| <= bound whose conic X^2 - D Y^2 = c Z^2
// has a rational point.
unsigned long long count_Nplus(long long bound, unsigned jobs = 1);

struct LSum {
    Rat value;
    bool used_fallback = false; // 1/(2p) main term substituted for some p > 13
};

// L(Q) = sum over squarefree q <= qmax of prod_{p | q} omega_p / (1 - omega_p),
// with omega_2 = 0 (even q contribute nothing) and exact omega_p from the
// table for p <= 13.
LSum L_sum(unsigned long qmax, const std::vector<LocalDensity>& densities);

struct DensityRow {
    long long b = 0;
    unsigned long long t = 0;
    unsigned long long nplus = 0;
    double ratio_t = 0.0; // T * sqrt(ln B) / (2B+1)^3
    double ratio_n = 0.0; // N+ * sqrt(ln B) / (2B)^3
};

std::vector<DensityRow> density_report(const std::vector<long long>& grid,
                                       unsigned jobs = 1);

// Header "B,T,Nplus,ratio_T,ratio_N"; ratios with six decimal places.
std::string density_csv(const std::vector<DensityRow>& rows);

} // namespace resq

#endif
