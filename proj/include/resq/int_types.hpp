#ifndef RESQ_INT_TYPES_HPP
#define RESQ_INT_TYPES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace resq {

using Int = mpz_class;
using Rat = mpq_class;

Int ipow(const Int& base, unsigned long e);
Int ipow(long long base, unsigned long e);

// base^e over the rationals; e may be negative, in which case base must be nonzero.
Rat qpow(long long base, long e);

// num/den in lowest terms; den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

// floor(sqrt(n)) for n >= 0.
long long isqrt_floor(long long n);
bool is_perfect_square(long long n, long long* root = nullptr);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

} // namespace resq

#endif
