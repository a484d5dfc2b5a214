#include "resq/ntheory.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace resq {

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 e, u64 m)
{
    u64 r = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1u) {
            r = mulmod(r, base, m);
        }
        base = mulmod(base, base, m);
        e >>= 1u;
    }
    return r;
}

bool miller_rabin(u64 n, u64 a)
{
    u64 d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    u64 x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1 || x == 0) {
        return true;
    }
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

u64 pollard_brent(u64 n)
{
    // n is odd, composite, and has no factor below 10^4 here.
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int lam = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; ++i) {
                y = mulmod(y, y, n) + c;
                if (y >= n) {
                    y -= n;
                }
            }
            int k = 0;
            while (k < lam && d == 1) {
                const int limit = std::min(128, lam - k);
                u64 ys = y;
                for (int i = 0; i < limit; ++i) {
                    y = mulmod(y, y, n) + c;
                    if (y >= n) {
                        y -= n;
                    }
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                if (d == n) {
                    // Backtrack one step at a time.
                    d = 1;
                    y = ys;
                    do {
                        y = mulmod(y, y, n) + c;
                        if (y >= n) {
                            y -= n;
                        }
                        d = std::gcd(x > y ? x - y : y - x, n);
                    } while (d == 1);
                    break;
                }
                k += limit;
            }
            lam *= 2;
        }
        if (d != n) {
            return d;
        }
    }
}

void factor_u64(u64 n, std::vector<u64>& out)
{
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const u64 d = pollard_brent(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

} // namespace

const std::vector<uint32_t>& small_primes()
{
    static const std::vector<uint32_t> primes = [] {
        const uint32_t limit = 10000;
        std::vector<bool> sieve(limit, true);
        std::vector<uint32_t> p;
        for (uint32_t i = 2; i < limit; ++i) {
            if (!sieve[i]) {
                continue;
            }
            p.push_back(i);
            for (uint32_t j = 2 * i; j < limit; j += i) {
                sieve[j] = false;
            }
        }
        return p;
    }();
    return primes;
}

bool is_prime(u64 n)
{
    if (n < 2) {
        return false;
    }
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    // This witness set is deterministic for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a)) {
            return false;
        }
    }
    return true;
}

bool is_prime(const Int& n)
{
    if (n < 2) {
        return false;
    }
    if (mpz_fits_ulong_p(n.get_mpz_t()) != 0 && mpz_get_ui(n.get_mpz_t()) <= UINT32_MAX) {
        return is_prime(static_cast<u64>(mpz_get_ui(n.get_mpz_t())));
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        u64 v = 0;
        mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, n.get_mpz_t());
        return is_prime(v);
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 25) > 0;
}

int Factorization::valuation(u64 p) const
{
    for (const auto& [q, e] : factors) {
        if (q == p) {
            return e;
        }
    }
    return 0;
}

Int Factorization::reconstruct() const
{
    Int v(sign);
    for (const auto& [p, e] : factors) {
        v *= ipow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(e));
    }
    return v;
}

std::string Factorization::to_string() const
{
    std::ostringstream os;
    if (sign < 0) {
        os << "-1";
    }
    bool first = sign > 0;
    for (const auto& [p, e] : factors) {
        os << (first ? "" : " * ") << p;
        if (e > 1) {
            os << "^" << e;
        }
        first = false;
    }
    if (first) {
        os << "1";
    }
    return os.str();
}

Factorization factor(long long n)
{
    if (n == 0) {
        throw std::domain_error("factor: zero has no factorization");
    }
    Factorization f;
    f.sign = n < 0 ? -1 : 1;
    u64 m = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
    for (uint32_t p : small_primes()) {
        if (static_cast<u64>(p) * p > m) {
            break;
        }
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            f.factors.emplace_back(p, e);
        }
    }
    if (m > 1) {
        std::vector<u64> rest;
        factor_u64(m, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) {
                ++j;
            }
            f.factors.emplace_back(rest[i], static_cast<int>(j - i));
            i = j;
        }
    }
    return f;
}

Factorization factor(const Int& n)
{
    if (!n.fits_slong_p()) {
        throw std::domain_error("factor: input beyond 64-bit scope");
    }
    return factor(n.get_si());
}

int jacobi(const Int& a, const Int& n)
{
    if (n <= 0 || mpz_even_p(n.get_mpz_t()) != 0) {
        throw std::domain_error("jacobi: modulus must be odd and positive");
    }
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

int jacobi(long long a, long long n)
{
    return jacobi(Int(a), Int(n));
}

int hilbert_symbol(long long u, long long v, const Place& place)
{
    if (u == 0 || v == 0) {
        throw std::domain_error("hilbert_symbol: arguments must be nonzero");
    }
    if (place.infinite) {
        return (u < 0 && v < 0) ? -1 : 1;
    }
    const u64 p = place.p;
    if (p < 2 || !is_prime(p)) {
        throw std::domain_error("hilbert_symbol: place must be prime or infinity");
    }

    auto split = [&](long long x, long long& unit) {
        int val = 0;
        while (x % static_cast<long long>(p) == 0) {
            x /= static_cast<long long>(p);
            ++val;
        }
        unit = x;
        return val;
    };
    long long u1 = 0, v1 = 0;
    const int alpha = split(u, u1);
    const int beta = split(v, v1);

    if (p == 2) {
        auto eps = [](long long x) { return ((x - 1) / 2) & 1LL; };
        auto omg = [](long long x) { return ((x * x - 1) / 8) & 1LL; };
        const long long e = eps(u1) * eps(v1) + alpha * omg(v1) + beta * omg(u1);
        return (e & 1LL) ? -1 : 1;
    }

    int s = 1;
    if ((alpha & 1) != 0 && (beta & 1) != 0 && (p % 4) == 3) {
        s = -s;
    }
    if ((beta & 1) != 0) {
        s *= jacobi(u1, static_cast<long long>(p));
    }
    if ((alpha & 1) != 0) {
        s *= jacobi(v1, static_cast<long long>(p));
    }
    return s;
}

} // namespace resq
