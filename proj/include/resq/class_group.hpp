#ifndef RESQ_CLASS_GROUP_HPP
#define RESQ_CLASS_GROUP_HPP

#include <ostream>
#include <string>
#include <vector>

#include "resq/int_types.hpp"

namespace resq {

// Binary quadratic form a x^2 + b xy + c y^2 of nonzero discriminant.
struct BQF {
    long long a = 0;
    long long b = 0;
    long long c = 0;

    long long disc() const; // b^2 - 4ac, overflow-checked
    bool primitive() const; // gcd(a, b, c) == 1

    bool operator==(const BQF& o) const = default;
    auto operator<=>(const BQF& o) const = default;
};

std::ostream& operator<<(std::ostream& os, const BQF& f);

// d = 1 mod 4 squarefree, or d = 4m with m = 2,3 mod 4 squarefree.
bool is_fundamental(long long d);

// (1, 0, -d/4) or (1, 1, (1-d)/4); the identity class.
BQF principal_form(long long d);

// Reduction for negative discriminants: the unique equivalent form with
// |b| <= a <= c, normalized to b >= 0 when |b| = a or a = c. Requires a > 0.
BQF reduce_neg(const BQF& f);

struct FormClassList {
    long long disc = 0;
    std::vector<BQF> forms; // reduced primitive representatives, sorted
    unsigned long long h() const { return forms.size(); }
};

// All primitive reduced forms of fundamental d < 0 by direct enumeration of
// a <= sqrt(|d|/3). Non-fundamental d are rejected unless explicitly allowed
// (exploration only; the discriminant sums never use them).
FormClassList class_number_neg(long long d, bool allow_nonfundamental = false);

// Gauss composition of primitive forms of the same discriminant, reduced.
BQF compose(const BQF& f, const BQF& g);

// Composition power f^e (e >= 0) with the principal form as identity.
BQF compose_pow(const BQF& f, unsigned long long e);

struct ClassGroupStructure {
    long long disc = 0;
    // Invariant factors d_1 | d_2 | ... with product h; empty for h = 1.
    std::vector<unsigned long long> invariant_factors;
    std::vector<BQF> reduced_forms;
    unsigned long long h() const { return reduced_forms.size(); }
};

ClassGroupStructure group_structure(long long d);

struct HParts {
    unsigned long long h = 0;
    unsigned long long h_odd = 0;  // largest odd divisor of h
    unsigned long long h_n = 0;    // size of the n-torsion subgroup
};

HParts h_parts(long long d, unsigned long long n);

enum class SMinusMode { odd_part, torsion };

// Sum of h_odd (or h_n) over fundamental discriminants -x < d < 0.
unsigned long long s_minus(long long x, SMinusMode mode = SMinusMode::odd_part,
                           unsigned long long torsion_n = 0, unsigned jobs = 1);

struct SMinusRow {
    long long x = 0;
    unsigned long long sum = 0;
    double ratio = 0.0; // sum * sqrt(ln X) / X^1.5
};

std::vector<SMinusRow> s_minus_report(const std::vector<long long>& grid,
                                      unsigned jobs = 1);

// Header "X,S_minus_odd,ratio"; ratio with six decimal places.
std::string s_minus_csv(const std::vector<SMinusRow>& rows);

// Lattice points (x, y) != (0, 0) with f(x, y) <= bound, f positive definite.
unsigned long long count_representations(const BQF& f, long long bound);

// All reduced forms of positive non-square discriminant d: 0 < b < sqrt(d)
// and sqrt(d) - b < 2|a| < sqrt(d) + b. Each result is checked against the
// companion bounds sqrt(d) - b < 2|c| < sqrt(d) + b and max(|a|, b, |c|) <
// sqrt(d).
std::vector<BQF> reduced_pos_enumerate(long long d);

} // namespace resq

#endif
