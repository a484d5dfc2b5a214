#include "resq/conic.hpp"

#include <set>
#include <stdexcept>

#include "resq/ntheory.hpp"

namespace resq {

namespace {

using i128 = __int128;

long long checked_ll(const Int& v, const char* what)
{
    if (!v.fits_slong_p()) {
        throw std::domain_error(std::string(what) + ": value beyond 64-bit scope");
    }
    return v.get_si();
}

} // namespace

std::ostream& operator<<(std::ostream& os, const TernaryConic& c)
{
    return os << c.q1 << "*X^2 + " << c.q2 << "*XY + " << c.q3 << "*Y^2 = " << c.m
              << "*Z^2";
}

std::ostream& operator<<(std::ostream& os, const ConicPoint& p)
{
    return os << "(" << p.x << ", " << p.y << ", " << p.z << ")";
}

TernaryConic conic_C(const QuadTriple& q)
{
    return TernaryConic{Int(1), Int(0), Int(-q.disc()), Int(q.c)};
}

TernaryConic conic_Cij(const QuadTriple& q, int n, IndexPair ij)
{
    if (n < 1 || n % 2 == 0) {
        throw std::invalid_argument("conic_Cij: degree must be odd");
    }
    ij.validate(n);
    const int k = ij.j - ij.i;
    const auto d = d_seq(q, k);
    Int mid = d[static_cast<std::size_t>(k)]
            - Int(q.a) * Int(q.c) * (k >= 2 ? d[static_cast<std::size_t>(k) - 2] : Int(0));
    if (k % 2 != 0) {
        mid = -mid;
    }
    return TernaryConic{ipow(q.c, static_cast<unsigned long>(k)), mid,
                        ipow(q.a, static_cast<unsigned long>(k)),
                        ipow(q.a, static_cast<unsigned long>(ij.i - 1))
                            * ipow(q.c, static_cast<unsigned long>(n - ij.j + 1))};
}

bool has_rational_point(const TernaryConic& conic)
{
    if (!conic.is_normal_form()) {
        throw std::invalid_argument(
            "has_rational_point: expected normal form X^2 - D Y^2 = c Z^2");
    }
    if (conic.m == 0) {
        throw std::domain_error("has_rational_point: c = 0 is out of scope");
    }
    const long long D = checked_ll(-conic.q3, "has_rational_point");
    const long long c = checked_ll(conic.m, "has_rational_point");

    if (D == 0) {
        return true; // (0 : 1 : 0)
    }
    if (D > 0 && is_perfect_square(D)) {
        return true; // split conic, (sqrt(D) : 1 : 0)
    }
    if (hilbert_symbol(D, c, Place::infinity()) != 1) {
        return false;
    }
    std::set<unsigned long long> places{2};
    for (const auto& [p, e] : factor(D).factors) {
        places.insert(p);
    }
    for (const auto& [p, e] : factor(c).factors) {
        places.insert(p);
    }
    for (unsigned long long p : places) {
        if (hilbert_symbol(D, c, Place::prime(p)) != 1) {
            return false;
        }
    }
    return true;
}

bool omega_member(const QuadTriple& q)
{
    const long long d = q.disc();
    if (d == 0) {
        return true; // v_p(0) is infinite, never exactly 1
    }
    for (const auto& [p, e] : factor(d).factors) {
        if (e != 1) {
            continue;
        }
        if (p == 2) {
            // b^2 - 4ac is 0 or 1 mod 4, so its 2-adic valuation is never 1.
            throw std::logic_error("omega_member: discriminant = 2 mod 4");
        }
        if (jacobi(q.c, static_cast<long long>(p)) == -1) {
            return false;
        }
    }
    return true;
}

long long default_point_height(const TernaryConic& c)
{
    Int bound = c.is_normal_form() ? Int(4) * abs(c.q3 * c.m) + 4
                                   : Int(4) * abs(c.q1 * c.q3 * c.m) + 4;
    return checked_ll(bound, "default_point_height");
}

namespace {

struct Candidate {
    long long h, x, y, z;

    bool better_than(const Candidate& o) const
    {
        if (h != o.h) {
            return h < o.h;
        }
        if (x != o.x) {
            return x < o.x;
        }
        if (y != o.y) {
            return y < o.y;
        }
        return z < o.z;
    }
};

void consider(std::optional<Candidate>& best, long long x, long long y, long long z)
{
    const Candidate cand{std::max({x < 0 ? -x : x, y < 0 ? -y : y, z}), x, y, z};
    if (!best || cand.better_than(*best)) {
        best = cand;
    }
}

// Scan of the box [0,hb]^3 for X^2 - D Y^2 = c Z^2 with Y >= 1. All
// coordinates may be taken nonnegative since only squares appear. The Y
// range is clipped per Z so that t = D Y^2 + c Z^2 stays inside [0, hb^2].
std::optional<Candidate> scan_normal(long long D, long long c, long long hb)
{
    std::optional<Candidate> best;
    const i128 hb2 = static_cast<i128>(hb) * hb;
    const i128 next2 = static_cast<i128>(hb + 1) * (hb + 1);
    for (long long z = 0; z <= hb; ++z) {
        const i128 cz2 = static_cast<i128>(c) * z * z;
        long long ylo = 1;
        long long yhi = hb;
        if (D > 0) {
            const i128 room = hb2 - cz2;
            if (room < 0) {
                continue;
            }
            if (room < static_cast<i128>(D) * next2) {
                long long cap = isqrt_floor(static_cast<long long>(room / D));
                while (static_cast<i128>(D) * cap * cap > room) {
                    --cap;
                }
                yhi = std::min(yhi, cap);
            }
            if (cz2 < 0) {
                if (-cz2 >= static_cast<i128>(D) * next2) {
                    continue;
                }
                long long need = isqrt_floor(static_cast<long long>((-cz2) / D));
                while (static_cast<i128>(D) * need * need < -cz2) {
                    ++need;
                }
                ylo = std::max(ylo, need);
            }
        } else if (D < 0) {
            if (cz2 < 0) {
                continue;
            }
            const long long A = -D;
            if (cz2 < static_cast<i128>(A) * next2) {
                long long cap = isqrt_floor(static_cast<long long>(cz2 / A));
                while (static_cast<i128>(A) * cap * cap > cz2) {
                    --cap;
                }
                yhi = std::min(yhi, cap);
            }
            if (cz2 > hb2) {
                const i128 deficit = cz2 - hb2;
                if (deficit >= static_cast<i128>(A) * next2) {
                    continue;
                }
                long long need = isqrt_floor(static_cast<long long>(deficit / A));
                while (static_cast<i128>(A) * need * need < deficit) {
                    ++need;
                }
                ylo = std::max(ylo, need);
            }
        } else {
            if (cz2 < 0 || cz2 > hb2) {
                continue;
            }
            long long x = 0;
            if (is_perfect_square(static_cast<long long>(cz2), &x)) {
                consider(best, x, 1, z);
            }
            continue;
        }
        for (long long y = ylo; y <= yhi; ++y) {
            const i128 t = cz2 + static_cast<i128>(D) * y * y;
            long long x = 0;
            if (is_perfect_square(static_cast<long long>(t), &x)) {
                consider(best, x, y, z);
            }
        }
    }
    return best;
}

// General conic: solve the quadratic in X per (Y, Z). Z may be taken
// nonnegative; Y runs over both signs because of the XY term.
std::optional<Candidate> scan_general(const TernaryConic& c, long long hb)
{
    std::optional<Candidate> best;
    const Int two_q1 = 2 * c.q1;
    for (long long z = 0; z <= hb; ++z) {
        const Int mz2 = c.m * z * z;
        for (long long y = -hb; y <= hb; ++y) {
            if (y == 0) {
                continue;
            }
            const Int qy = c.q2 * y;
            const Int disc = qy * qy - 4 * c.q1 * (c.q3 * y * y - mz2);
            if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0) {
                continue;
            }
            Int s;
            mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
            for (int sgn : {1, -1}) {
                if (s == 0 && sgn < 0) {
                    continue;
                }
                const Int num = -qy + sgn * s;
                if (num % two_q1 != 0) {
                    continue;
                }
                const Int x = num / two_q1;
                if (abs(x) > hb) {
                    continue;
                }
                consider(best, checked_ll(x, "find_point"), y, z);
            }
        }
    }
    return best;
}

} // namespace

std::optional<ConicPoint> find_point(const TernaryConic& c, long long height)
{
    if (height < 1) {
        throw std::invalid_argument("find_point: height must be >= 1");
    }
    if (height > 3000000000LL) {
        throw std::invalid_argument("find_point: height beyond supported range");
    }

    const bool normal = c.is_normal_form();
    long long D = 0, cc = 0;
    if (normal) {
        D = checked_ll(-c.q3, "find_point");
        cc = checked_ll(c.m, "find_point");
    } else if (c.q1 == 0) {
        throw std::invalid_argument("find_point: q1 = 0 is not supported");
    }

    // Grow the box geometrically: a full scan of [0,hb] sees every point of
    // height <= hb, so the first nonempty scan already holds the minimum.
    long long hb = std::min(height, 8LL);
    for (;;) {
        const auto best = normal ? scan_normal(D, cc, hb) : scan_general(c, hb);
        if (best) {
            return ConicPoint{best->x, best->y, best->z};
        }
        if (hb == height) {
            return std::nullopt;
        }
        hb = (hb <= height / 4) ? hb * 4 : height;
    }
}

std::optional<ResultantWitness> witness_point_from_resultant(const IntPoly& r,
                                                             const QuadTriple& q0)
{
    const int n = r.degree();
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument(
            "witness_point_from_resultant: degree must be odd and >= 3");
    }
    const Int res = resultant(r, q0);
    if (res != 1 && res != -1) {
        throw std::domain_error("witness_point_from_resultant: resultant must be +-1");
    }

    QuadTriple q = q0;
    bool negated = false;
    if (res == -1) {
        // Odd-degree homogeneity in (a,b,c): negating the triple flips the sign.
        q = q0.negated();
        negated = true;
        if (resultant(r, q) != 1) {
            throw std::logic_error("witness_point_from_resultant: sign reduction failed");
        }
    }

    if (q.c == 0) {
        return std::nullopt; // both clearing systems are singular
    }
    const Int D(q.disc());

    for (const IndexPair ij : {IndexPair{1, 2}, IndexPair{1, 3}}) {
        const auto w = resultant_xy(r, q, ij);
        if (!w) {
            continue;
        }
        const int k = ij.j - 1;
        const auto d = d_seq(q, k);
        Int sigma = d[static_cast<std::size_t>(k)]
                  - Int(q.a) * Int(q.c)
                        * (k >= 2 ? d[static_cast<std::size_t>(k) - 2] : Int(0));
        if (k % 2 != 0) {
            sigma = -sigma;
        }

        // c^(n-k) (c^k X^2 + sigma XY + a^k Y^2) = 1, and
        // (2 c^k X + sigma Y)^2 - (sigma^2 - 4(ac)^k) Y^2 = 4 c^k (...),
        // where sigma^2 - 4(ac)^k = D d_{k-1}^2. Hence with
        //   U = 2 c^k X + sigma Y,  V = d_{k-1} Y,  W = 2 c^(k - (n+1)/2)
        // we get U^2 - D V^2 = c W^2 over the rationals.
        const Rat u = Rat(2 * ipow(q.c, static_cast<unsigned long>(k))) * w->x
                    + Rat(sigma) * w->y;
        const Rat v = Rat(d[static_cast<std::size_t>(k) - 1]) * w->y;
        const Rat wz = Rat(2) * qpow(q.c, k - (n + 1) / 2);
        if (u * u - Rat(D) * v * v != Rat(q.c) * wz * wz) {
            throw std::logic_error("witness_point_from_resultant: identity failed");
        }

        Int den = u.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), wz.get_den().get_mpz_t());
        std::array<Int, 3> pt;
        pt[0] = u.get_num() * (den / u.get_den());
        pt[1] = v.get_num() * (den / v.get_den());
        pt[2] = wz.get_num() * (den / wz.get_den());

        Int g = gcd(gcd(pt[0], pt[1]), pt[2]);
        if (g > 1) {
            for (auto& t : pt) {
                t /= g;
            }
        }
        for (const auto& t : pt) {
            if (t != 0) {
                if (t < 0) {
                    for (auto& s : pt) {
                        s = -s;
                    }
                }
                break;
            }
        }

        if (pt[0] * pt[0] - D * pt[1] * pt[1] != Int(q.c) * pt[2] * pt[2]) {
            throw std::logic_error("witness_point_from_resultant: point check failed");
        }
        return ResultantWitness{pt, conic_C(q), q, negated, ij};
    }
    return std::nullopt;
}

} // namespace resq
