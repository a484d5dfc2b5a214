#include "resq/int_types.hpp"

#include <cmath>
#include <stdexcept>

namespace resq {

Int ipow(const Int& base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int ipow(long long base, unsigned long e)
{
    return ipow(Int(base), e);
}

Rat qpow(long long base, long e)
{
    if (e >= 0) {
        return Rat(ipow(base, static_cast<unsigned long>(e)));
    }
    if (base == 0) {
        throw std::domain_error("qpow: negative power of zero");
    }
    Rat r(Int(1), ipow(base, static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

Rat make_rat(const Int& num, const Int& den)
{
    if (den == 0) {
        throw std::domain_error("make_rat: zero denominator");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

long long isqrt_floor(long long n)
{
    if (n < 0) {
        throw std::domain_error("isqrt_floor: negative input");
    }
    if (n == 0) {
        return 0;
    }
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

bool is_perfect_square(long long n, long long* root)
{
    if (n < 0) {
        return false;
    }
    // Quick residue filter: squares mod 64 hit only 12 classes.
    static const uint64_t kSquareMask64 = [] {
        uint64_t m = 0;
        for (unsigned i = 0; i < 64; ++i) {
            m |= uint64_t(1) << ((i * i) & 63u);
        }
        return m;
    }();
    if (!(kSquareMask64 >> (static_cast<uint64_t>(n) & 63u) & 1u)) {
        return false;
    }
    const long long r = isqrt_floor(n);
    if (r * r != n) {
        return false;
    }
    if (root != nullptr) {
        *root = r;
    }
    return true;
}

std::string to_string(const Int& v)
{
    return v.get_str();
}

std::string to_string(const Rat& v)
{
    return v.get_str();
}

} // namespace resq
