#include "resq/pell.hpp"

#include <stdexcept>

namespace resq {

namespace {

using i128 = __int128;

} // namespace

std::ostream& operator<<(std::ostream& os, const PellEquation& e)
{
    return os << e.q1 << "*x^2 + " << e.q2 << "*xy + " << e.q3 << "*y^2 = " << e.n;
}

std::array<PellEquation, 3> cubic_conics(const QuadTriple& q)
{
    const Int a(q.a), b(q.b), c(q.c);
    const PellEquation e2{c, -b, a, c * c};
    const PellEquation e3{c * c, b * b - 2 * a * c, a * a, b * b * c};
    const PellEquation e4{c * c * c, -(b * b * b - 3 * a * b * c), a * a * a,
                          (b * b - a * c) * (b * b - a * c)};
    return {e2, e3, e4};
}

std::vector<std::pair<long long, long long>>
solve_bqf_diophantine(const PellEquation& e, long long height)
{
    if (height < 1) {
        throw std::invalid_argument("solve_bqf_diophantine: height must be >= 1");
    }
    if (e.q1 == 0 && e.q2 == 0 && e.q3 == 0) {
        throw std::invalid_argument("solve_bqf_diophantine: degenerate equation");
    }

    std::vector<std::pair<long long, long long>> out;
    const bool small = e.q1.fits_slong_p() && e.q2.fits_slong_p()
                    && e.q3.fits_slong_p() && e.n.fits_slong_p()
                    && height <= 2000000000LL;
    if (small) {
        const long long q1 = e.q1.get_si(), q2 = e.q2.get_si(), q3 = e.q3.get_si();
        const long long n = e.n.get_si();
        for (long long x = -height; x <= height; ++x) {
            for (long long y = -height; y <= height; ++y) {
                const i128 v = static_cast<i128>(q1) * x * x
                             + static_cast<i128>(q2) * x * y
                             + static_cast<i128>(q3) * y * y;
                if (v == n) {
                    out.emplace_back(x, y);
                }
            }
        }
        return out;
    }
    for (long long x = -height; x <= height; ++x) {
        for (long long y = -height; y <= height; ++y) {
            if (e.q1 * x * x + e.q2 * x * y + e.q3 * y * y == e.n) {
                out.emplace_back(x, y);
            }
        }
    }
    return out;
}

namespace {

// Exact 13-term cubic resultant in machine words; the caller certifies the
// bound 13 * max(|a|,|b|,|c|)^3 * H^2 fits.
long long resultant_cubic_i64(long long a, long long b, long long c,
                              const long long* r)
{
    const long long r0 = r[0], r1 = r[1], r2 = r[2], r3 = r[3];
    return a * a * a * r3 * r3 - a * a * b * r2 * r3 - 2 * a * a * c * r1 * r3
         + a * a * c * r2 * r2 + a * b * b * r1 * r3 + 3 * a * b * c * r0 * r3
         - a * b * c * r1 * r2 - 2 * a * c * c * r0 * r2 + a * c * c * r1 * r1
         - b * b * b * r0 * r3 + b * b * c * r0 * r2 - b * c * c * r0 * r1
         + c * c * c * r0 * r0;
}

bool advance(std::vector<long long>& r, long long bound)
{
    // Odometer over (r_1, ..., r_n), each in [-bound, bound]; r_0 moves last
    // and only over [1, bound].
    for (std::size_t t = r.size(); t-- > 1;) {
        if (r[t] < bound) {
            ++r[t];
            return true;
        }
        r[t] = -bound;
    }
    if (r[0] < bound) {
        ++r[0];
        return true;
    }
    return false;
}

} // namespace

std::optional<IntPoly> find_R(const QuadTriple& q, int degree, long long coeff_bound)
{
    if (degree < 3 || degree % 2 == 0) {
        throw std::invalid_argument("find_R: degree must be odd and >= 3");
    }
    if (coeff_bound < 1) {
        throw std::invalid_argument("find_R: coefficient bound must be >= 1");
    }

    const long long qmax = std::max({q.a < 0 ? -q.a : q.a, q.b < 0 ? -q.b : q.b,
                                     q.c < 0 ? -q.c : q.c, 1LL});
    // Machine-word route is safe when every partial product stays far from
    // 2^63: each of the 13 terms is at most 3 * qmax^3 * H^2.
    const bool fast = degree == 3
                   && static_cast<double>(qmax) * qmax * qmax
                              * static_cast<double>(coeff_bound) * coeff_bound
                          < 4e16;

    std::vector<long long> r(static_cast<std::size_t>(degree) + 1, -coeff_bound);
    r[0] = 1;
    do {
        if (fast) {
            const long long v = resultant_cubic_i64(q.a, q.b, q.c, r.data());
            if (v != 1 && v != -1) {
                continue;
            }
        } else {
            const Int v = resultant(poly_from(r), q);
            if (v != 1 && v != -1) {
                continue;
            }
        }
        return poly_from(r);
    } while (advance(r, coeff_bound));
    return std::nullopt;
}

} // namespace resq
