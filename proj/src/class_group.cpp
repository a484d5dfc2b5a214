#include "resq/class_group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "resq/ntheory.hpp"
#include "resq/parallel.hpp"

namespace resq {

namespace {

using i128 = __int128;

long long checked_ll(const Int& v, const char* what)
{
    if (!v.fits_slong_p()) {
        throw std::overflow_error(std::string(what) + ": coefficient overflow");
    }
    return v.get_si();
}

long long floordiv(long long num, long long den)
{
    long long q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) {
        --q;
    }
    return q;
}

// Reduction loop on exact integers; D < 0, A > 0 on entry.
void reduce_core(Int& a, Int& b, Int& c, const Int& d)
{
    for (;;) {
        // Normalize b into (-a, a].
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), Int(b + a).get_mpz_t(), Int(2 * a).get_mpz_t());
        b -= 2 * a * q;
        if (b == -a) {
            b = a;
        }
        c = b * b - d;
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), Int(4 * a).get_mpz_t());
        if (a <= c) {
            break;
        }
        std::swap(a, c);
        b = -b;
    }
    if (a == c && b < 0) {
        b = -b;
    }
}

} // namespace

long long BQF::disc() const
{
    const i128 d = static_cast<i128>(b) * b - 4 * static_cast<i128>(a) * c;
    if (d > i128(INT64_MAX) || d < i128(INT64_MIN)) {
        throw std::overflow_error("BQF::disc: overflow");
    }
    return static_cast<long long>(d);
}

bool BQF::primitive() const
{
    return std::gcd(std::gcd(a, b), c) == 1;
}

std::ostream& operator<<(std::ostream& os, const BQF& f)
{
    return os << "(" << f.a << ", " << f.b << ", " << f.c << ")";
}

bool is_fundamental(long long d)
{
    if (d == 0 || d == 1) {
        return false;
    }
    auto squarefree = [](long long n) {
        for (const auto& [p, e] : factor(n).factors) {
            if (e > 1) {
                return false;
            }
        }
        return true;
    };
    const long long m4 = ((d % 4) + 4) % 4;
    if (m4 == 1) {
        return squarefree(d);
    }
    if (m4 == 0) {
        const long long m = d / 4;
        const long long mm4 = ((m % 4) + 4) % 4;
        return (mm4 == 2 || mm4 == 3) && squarefree(m);
    }
    return false;
}

BQF principal_form(long long d)
{
    const long long m4 = ((d % 4) + 4) % 4;
    if (m4 == 0) {
        return {1, 0, -d / 4};
    }
    if (m4 == 1) {
        return {1, 1, (1 - d) / 4};
    }
    throw std::invalid_argument("principal_form: d must be 0 or 1 mod 4");
}

BQF reduce_neg(const BQF& f)
{
    if (f.disc() >= 0) {
        throw std::invalid_argument("reduce_neg: definite (negative) discriminant required");
    }
    if (f.a <= 0) {
        throw std::invalid_argument("reduce_neg: positive leading coefficient required");
    }
    Int a(f.a), b(f.b), c(f.c);
    const Int d(f.disc());
    reduce_core(a, b, c, d);
    return {checked_ll(a, "reduce_neg"), checked_ll(b, "reduce_neg"),
            checked_ll(c, "reduce_neg")};
}

FormClassList class_number_neg(long long d, bool allow_nonfundamental)
{
    if (d >= 0) {
        throw std::invalid_argument("class_number_neg: d must be negative");
    }
    const long long m4 = ((d % 4) + 4) % 4;
    if (m4 != 0 && m4 != 1) {
        throw std::invalid_argument("class_number_neg: d must be 0 or 1 mod 4");
    }
    if (!allow_nonfundamental && !is_fundamental(d)) {
        throw std::invalid_argument("class_number_neg: d is not fundamental");
    }

    FormClassList out;
    out.disc = d;
    const long long amax = isqrt_floor(-d / 3);
    for (long long a = 1; a <= amax; ++a) {
        for (long long b = (d % 2 == 0) ? 0 : 1; b <= a; b += 2) {
            const long long num = b * b - d;
            if (num % (4 * a) != 0) {
                continue;
            }
            const long long c = num / (4 * a);
            if (c < a) {
                continue;
            }
            if (std::gcd(std::gcd(a, b), c) != 1) {
                continue;
            }
            out.forms.push_back({a, b, c});
            if (0 < b && b < a && a < c) {
                out.forms.push_back({a, -b, c});
            }
        }
    }
    std::sort(out.forms.begin(), out.forms.end());
    return out;
}

BQF compose(const BQF& f, const BQF& g)
{
    if (f.disc() != g.disc()) {
        throw std::invalid_argument("compose: discriminants differ");
    }
    if (f.disc() >= 0) {
        throw std::invalid_argument("compose: negative discriminant required");
    }
    if (!f.primitive() || !g.primitive()) {
        throw std::invalid_argument("compose: both forms must be primitive");
    }
    if (f.a <= 0 || g.a <= 0) {
        throw std::invalid_argument("compose: positive definite forms required");
    }

    const Int a1(f.a), b1(f.b), c1(f.c);
    const Int a2(g.a), b2(g.b), c2(g.c);
    const Int d(f.disc());

    const Int s = (b1 + b2) / 2;
    Int g0, u0, v0;
    mpz_gcdext(g0.get_mpz_t(), u0.get_mpz_t(), v0.get_mpz_t(), a1.get_mpz_t(),
               a2.get_mpz_t());
    Int d0, v1, w;
    mpz_gcdext(d0.get_mpz_t(), v1.get_mpz_t(), w.get_mpz_t(), g0.get_mpz_t(),
               s.get_mpz_t());
    const Int v = v0 * v1;
    const Int a2d = a2 / d0;

    Int a3 = a1 * a2d / d0;
    Int b3 = b2 + 2 * a2d * ((s - b2) * v - w * c2);
    Int c3;
    // Normalize b3 before squaring to keep the intermediate small.
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), Int(b3 + a3).get_mpz_t(), Int(2 * a3).get_mpz_t());
    b3 -= 2 * a3 * q;
    Int num = b3 * b3 - d;
    if (mpz_divisible_p(num.get_mpz_t(), Int(4 * a3).get_mpz_t()) == 0) {
        throw std::logic_error("compose: discriminant congruence failed");
    }
    mpz_divexact(c3.get_mpz_t(), num.get_mpz_t(), Int(4 * a3).get_mpz_t());

    reduce_core(a3, b3, c3, d);
    return {checked_ll(a3, "compose"), checked_ll(b3, "compose"),
            checked_ll(c3, "compose")};
}

BQF compose_pow(const BQF& f, unsigned long long e)
{
    BQF acc = reduce_neg(principal_form(f.disc()));
    BQF base = reduce_neg(f);
    while (e > 0) {
        if (e & 1ull) {
            acc = compose(acc, base);
        }
        e >>= 1ull;
        if (e > 0) {
            base = compose(base, base);
        }
    }
    return acc;
}

ClassGroupStructure group_structure(long long d)
{
    ClassGroupStructure out;
    out.disc = d;
    out.reduced_forms = class_number_neg(d).forms;
    const unsigned long long h = out.reduced_forms.size();
    if (h == 1) {
        return out;
    }

    const BQF id = reduce_neg(principal_form(d));
    const auto hfac = factor(static_cast<long long>(h));

    // Element orders, then per-prime partitions from the counts of elements
    // of order dividing p^k.
    std::vector<unsigned long long> orders;
    orders.reserve(out.reduced_forms.size());
    for (const BQF& f : out.reduced_forms) {
        unsigned long long o = h;
        for (const auto& [p, e] : hfac.factors) {
            for (int t = 0; t < e; ++t) {
                if (o % p == 0 && compose_pow(f, o / p) == id) {
                    o /= p;
                } else {
                    break;
                }
            }
        }
        orders.push_back(o);
    }

    // For each p, recover the p-Sylow partition from the counts
    // m_k = #{x : x^(p^k) = id} = p^(sum_i min(part_i, k)): the difference
    // log_p m_k - log_p m_{k-1} is the number of parts of size >= k.
    std::vector<std::vector<unsigned long long>> partitions; // [p, parts...]
    for (const auto& [p, e] : hfac.factors) {
        std::vector<unsigned long long> m(static_cast<std::size_t>(e) + 1, 0);
        for (unsigned long long o : orders) {
            int v = 0;
            while (o % p == 0) {
                o /= p;
                ++v;
            }
            if (o != 1) {
                continue; // order is not a p-power: outside the p-Sylow
            }
            for (int k = v; k <= e; ++k) {
                ++m[static_cast<std::size_t>(k)];
            }
        }
        std::vector<int> logm(static_cast<std::size_t>(e) + 1, 0);
        for (int k = 0; k <= e; ++k) {
            unsigned long long mk = m[static_cast<std::size_t>(k)];
            int lg = 0;
            while (mk % p == 0) {
                mk /= p;
                ++lg;
            }
            if (mk != 1) {
                throw std::logic_error("group_structure: torsion count is not a p-power");
            }
            logm[static_cast<std::size_t>(k)] = lg;
        }
        std::vector<unsigned long long> entry{p};
        const int nparts = logm[1];
        for (int i = 1; i <= nparts; ++i) {
            int size = 0;
            for (int k = 1; k <= e; ++k) {
                if (logm[static_cast<std::size_t>(k)] - logm[static_cast<std::size_t>(k) - 1]
                    >= i) {
                    size = k;
                }
            }
            entry.push_back(static_cast<unsigned long long>(size));
        }
        partitions.push_back(std::move(entry));
    }

    std::size_t rank = 0;
    for (const auto& pp : partitions) {
        rank = std::max(rank, pp.size() - 1);
    }
    std::vector<unsigned long long> factors_desc;
    for (std::size_t i = 0; i < rank; ++i) {
        unsigned long long f = 1;
        for (const auto& pp : partitions) {
            const unsigned long long p = pp[0];
            if (i + 1 < pp.size()) {
                for (unsigned long long t = 0; t < pp[i + 1]; ++t) {
                    f *= p;
                }
            }
        }
        factors_desc.push_back(f);
    }
    out.invariant_factors.assign(factors_desc.rbegin(), factors_desc.rend());

    unsigned long long prod = 1;
    for (unsigned long long f : out.invariant_factors) {
        prod *= f;
    }
    if (prod != h) {
        throw std::logic_error("group_structure: invariant factors do not multiply to h");
    }
    return out;
}

HParts h_parts(long long d, unsigned long long n)
{
    if (n < 1) {
        throw std::invalid_argument("h_parts: n must be >= 1");
    }
    const auto st = group_structure(d);
    HParts out;
    out.h = st.h();
    out.h_odd = out.h;
    while (out.h_odd % 2 == 0) {
        out.h_odd /= 2;
    }
    out.h_n = 1;
    for (unsigned long long f : st.invariant_factors) {
        out.h_n *= std::gcd(n, f);
    }
    return out;
}

namespace {

// h by direct counting; avoids building the form list in the hot sweep.
unsigned long long class_number_count(long long d)
{
    unsigned long long h = 0;
    const long long amax = isqrt_floor(-d / 3);
    for (long long a = 1; a <= amax; ++a) {
        for (long long b = (d % 2 == 0) ? 0 : 1; b <= a; b += 2) {
            const long long num = b * b - d;
            if (num % (4 * a) != 0) {
                continue;
            }
            const long long c = num / (4 * a);
            if (c < a || std::gcd(std::gcd(a, b), c) != 1) {
                continue;
            }
            h += (0 < b && b < a && a < c) ? 2 : 1;
        }
    }
    return h;
}

} // namespace

unsigned long long s_minus(long long x, SMinusMode mode, unsigned long long torsion_n,
                           unsigned jobs)
{
    if (x < 3) {
        throw std::invalid_argument("s_minus: x must be >= 3");
    }
    if (mode == SMinusMode::torsion && torsion_n < 1) {
        throw std::invalid_argument("s_minus: torsion mode needs n >= 1");
    }
    const std::size_t total = static_cast<std::size_t>(x - 3); // d = -3 .. -(x-1)
    return count_sliced(total, jobs, [&](std::size_t begin, std::size_t end) {
        unsigned long long sum = 0;
        for (std::size_t idx = begin; idx < end; ++idx) {
            const long long d = -3 - static_cast<long long>(idx);
            if (!is_fundamental(d)) {
                continue;
            }
            if (mode == SMinusMode::odd_part) {
                unsigned long long h = class_number_count(d);
                while (h % 2 == 0) {
                    h /= 2;
                }
                sum += h;
            } else {
                sum += h_parts(d, torsion_n).h_n;
            }
        }
        return sum;
    });
}

std::vector<SMinusRow> s_minus_report(const std::vector<long long>& grid, unsigned jobs)
{
    for (std::size_t t = 1; t < grid.size(); ++t) {
        if (grid[t] <= grid[t - 1]) {
            throw std::invalid_argument("s_minus_report: grid must be ascending");
        }
    }
    std::vector<SMinusRow> rows;
    for (long long x : grid) {
        SMinusRow row;
        row.x = x;
        row.sum = s_minus(x, SMinusMode::odd_part, 0, jobs);
        row.ratio = static_cast<double>(row.sum) * std::sqrt(std::log(static_cast<double>(x)))
                  / std::pow(static_cast<double>(x), 1.5);
        rows.push_back(row);
    }
    return rows;
}

std::string s_minus_csv(const std::vector<SMinusRow>& rows)
{
    std::string out = "X,S_minus_odd,ratio\n";
    char buf[96];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%lld,%llu,%.6f\n", r.x, r.sum, r.ratio);
        out += buf;
    }
    return out;
}

unsigned long long count_representations(const BQF& f, long long bound)
{
    if (f.a <= 0 || f.disc() >= 0) {
        throw std::invalid_argument("count_representations: positive definite form required");
    }
    if (bound < 0) {
        throw std::invalid_argument("count_representations: bound must be >= 0");
    }
    const long long absd = -f.disc();
    const i128 cap128 = 4 * static_cast<i128>(f.a) * bound;
    if (cap128 > INT64_MAX) {
        throw std::overflow_error("count_representations: bound too large");
    }
    const long long cap = static_cast<long long>(cap128); // (2ax+by)^2 + |D|y^2 <= 4a f
    unsigned long long n = 0;
    const long long ymax = isqrt_floor(cap / absd);
    for (long long y = -ymax; y <= ymax; ++y) {
        const long long rem = cap - absd * y * y;
        if (rem < 0) {
            continue;
        }
        const long long s = isqrt_floor(rem);
        const long long lo = -s - f.b * y;
        const long long hi = s - f.b * y;
        const long long xlo = -floordiv(-lo, 2 * f.a); // ceil(lo / 2a)
        const long long xhi = floordiv(hi, 2 * f.a);
        if (xhi >= xlo) {
            n += static_cast<unsigned long long>(xhi - xlo + 1);
        }
    }
    return n - 1; // drop the origin
}

std::vector<BQF> reduced_pos_enumerate(long long d)
{
    if (d <= 0) {
        throw std::invalid_argument("reduced_pos_enumerate: d must be positive");
    }
    const long long m4 = d % 4;
    if (m4 != 0 && m4 != 1) {
        throw std::invalid_argument("reduced_pos_enumerate: d must be 0 or 1 mod 4");
    }
    if (is_perfect_square(d)) {
        throw std::invalid_argument("reduced_pos_enumerate: d must not be a square");
    }

    const long long s = isqrt_floor(d);
    auto above_root = [d](long long v) { return v > 0 && static_cast<i128>(v) * v > d; };
    auto below_root = [d](long long v) { return v <= 0 || static_cast<i128>(v) * v < d; };

    std::vector<BQF> out;
    for (long long b = (d % 2 == 0) ? 2 : 1; b <= s; b += 2) {
        for (long long aa = 1; 2 * aa < s + b + 2; ++aa) {
            if (!above_root(2 * aa + b) || !below_root(2 * aa - b)) {
                continue;
            }
            const long long num = b * b - d;
            if (num % (4 * aa) != 0) {
                continue;
            }
            for (long long a : {aa, -aa}) {
                const long long c = num / (4 * a);
                const BQF f{a, b, c};
                // Companion bounds that every reduced form must satisfy.
                const long long ac = c < 0 ? -c : c;
                if (!above_root(2 * ac + b) || !below_root(2 * ac - b)
                    || !below_root(aa) || !below_root(ac) || !below_root(b)) {
                    throw std::logic_error("reduced_pos_enumerate: bound check failed");
                }
                out.push_back(f);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace resq
