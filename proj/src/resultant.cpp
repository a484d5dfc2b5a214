#include "resq/resultant.hpp"

#include <sstream>
#include <stdexcept>

namespace resq {

IntPoly::IntPoly(std::vector<Int> c)
    : coeffs(std::move(c))
{
    if (coeffs.empty()) {
        throw std::invalid_argument("IntPoly: no coefficients");
    }
}

std::string IntPoly::to_string() const
{
    const int n = degree();
    std::ostringstream os;
    bool first = true;
    for (int t = 0; t <= n; ++t) {
        const Int& r = coeffs[t];
        if (r == 0 && n > 0) {
            continue;
        }
        const int e = n - t;
        Int mag = abs(r);
        if (first) {
            if (r < 0) {
                os << "-";
            }
            first = false;
        } else {
            os << (r < 0 ? " - " : " + ");
        }
        if (mag != 1 || e == 0) {
            os << mag.get_str();
        }
        if (e >= 1) {
            if (mag != 1) {
                os << "*";
            }
            os << "x";
            if (e > 1) {
                os << "^" << e;
            }
        }
    }
    if (first) {
        os << "0";
    }
    return os.str();
}

IntPoly poly_from(const std::vector<long long>& coeffs)
{
    std::vector<Int> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) {
        c.emplace_back(v);
    }
    return IntPoly(std::move(c));
}

long long QuadTriple::disc() const
{
    const __int128 d = static_cast<__int128>(b) * b - 4 * static_cast<__int128>(a) * c;
    if (d > __int128(INT64_MAX) || d < __int128(INT64_MIN)) {
        throw std::overflow_error("QuadTriple::disc: overflow");
    }
    return static_cast<long long>(d);
}

std::ostream& operator<<(std::ostream& os, const QuadTriple& q)
{
    return os << "(" << q.a << ", " << q.b << ", " << q.c << ")";
}

void IndexPair::validate(int n) const
{
    if (!(1 <= i && i < j && j <= n + 1)) {
        throw std::invalid_argument("IndexPair: need 1 <= i < j <= n+1");
    }
}

ExactMatrix band_matrix(int k, const QuadTriple& q)
{
    if (k < 1) {
        throw std::invalid_argument("band_matrix: k must be positive");
    }
    ExactMatrix m(static_cast<std::size_t>(k) + 2, static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) {
        m(t, t) = q.a;
        m(t + 1, t) = q.b;
        m(t + 2, t) = q.c;
    }
    return m;
}

ExactMatrix band_matrix_minor(int k, int i, int j, const QuadTriple& q)
{
    if (!(1 <= i && i < j && j <= k + 2)) {
        throw std::invalid_argument("band_matrix_minor: need 1 <= i < j <= k+2");
    }
    const ExactMatrix a = band_matrix(k, q);
    ExactMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    std::size_t row = 0;
    for (int s = 1; s <= k + 2; ++s) {
        if (s == i || s == j) {
            continue;
        }
        for (int t = 0; t < k; ++t) {
            m(row, t) = a(s - 1, t);
        }
        ++row;
    }
    return m;
}

ExactMatrix resultant_matrix(const std::vector<Int>& r, const QuadTriple& q)
{
    const int n = static_cast<int>(r.size()) - 1;
    if (n < 1) {
        throw std::invalid_argument("resultant_matrix: need degree >= 1");
    }
    const std::size_t dim = static_cast<std::size_t>(n) + 2;
    ExactMatrix m(dim, dim);
    for (int t = 0; t <= n; ++t) {
        m(t, 0) = r[t];
        m(t + 1, 1) = r[t];
    }
    for (int t = 0; t < n; ++t) {
        m(t, t + 2) = q.a;
        m(t + 1, t + 2) = q.b;
        m(t + 2, t + 2) = q.c;
    }
    return m;
}

ExactMatrix sylvester_matrix(const IntPoly& r, const QuadTriple& q)
{
    if (r.degree() < 1) {
        throw std::invalid_argument("sylvester_matrix: need degree >= 1");
    }
    if (r.leading() == 0) {
        throw std::invalid_argument("sylvester_matrix: leading coefficient is zero");
    }
    return resultant_matrix(r.coeffs, q);
}

Int resultant(const IntPoly& r, const QuadTriple& q)
{
    return det_exact(sylvester_matrix(r, q));
}

Int resultant_cubic_expanded(const QuadTriple& q, const std::array<Int, 4>& r)
{
    const Int a(q.a), b(q.b), c(q.c);
    const Int &r0 = r[0], &r1 = r[1], &r2 = r[2], &r3 = r[3];
    return a * a * a * r3 * r3
         - a * a * b * r2 * r3
         - 2 * a * a * c * r1 * r3
         + a * a * c * r2 * r2
         + a * b * b * r1 * r3
         + 3 * a * b * c * r0 * r3
         - a * b * c * r1 * r2
         - 2 * a * c * c * r0 * r2
         + a * c * c * r1 * r1
         - b * b * b * r0 * r3
         + b * b * c * r0 * r2
         - b * c * c * r0 * r1
         + c * c * c * r0 * r0;
}

std::vector<Int> d_seq(const QuadTriple& q, int kmax)
{
    if (kmax < 0) {
        throw std::invalid_argument("d_seq: kmax must be >= 0");
    }
    std::vector<Int> d(static_cast<std::size_t>(kmax) + 1);
    const Int ac = Int(q.a) * Int(q.c);
    d[0] = 1;
    if (kmax >= 1) {
        d[1] = q.b;
    }
    for (int k = 2; k <= kmax; ++k) {
        d[k] = q.b * d[k - 1] - ac * d[k - 2];
    }
    return d;
}

Int power_sum(const QuadTriple& q, int k)
{
    if (k < 0) {
        throw std::invalid_argument("power_sum: k must be >= 0");
    }
    if (k == 0) {
        return Int(2);
    }
    const Int ac = Int(q.a) * Int(q.c);
    Int prev(2), cur(q.b);
    for (int t = 2; t <= k; ++t) {
        Int next = q.b * cur - ac * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::optional<ResultantXY> resultant_xy(const IntPoly& r, const QuadTriple& q,
                                        IndexPair ij)
{
    const int n = r.degree();
    if (n < 2) {
        throw std::invalid_argument("resultant_xy: need degree >= 2");
    }
    ij.validate(n);

    // Right-hand side: coefficients of R with entries i and j removed.
    std::vector<Int> rhs;
    rhs.reserve(static_cast<std::size_t>(n) - 1);
    for (int s = 1; s <= n + 1; ++s) {
        if (s == ij.i || s == ij.j) {
            continue;
        }
        rhs.push_back(r.coeffs[static_cast<std::size_t>(s) - 1]);
    }

    const ExactMatrix b = band_matrix_minor(n - 1, ij.i, ij.j, q);
    auto lambda = solve_linear_exact(b, rhs);
    if (!lambda) {
        return std::nullopt;
    }

    // X and Y are what is left of rows i and j after subtracting the banded
    // combination A_n (lambda, 0) from the first column.
    const ExactMatrix a = band_matrix(n, q);
    ExactVector padded = *lambda;
    padded.emplace_back(0);
    auto row_dot = [&](int row1) {
        Rat acc(0);
        for (int t = 0; t < n; ++t) {
            if (a(static_cast<std::size_t>(row1) - 1, static_cast<std::size_t>(t)) != 0) {
                acc += Rat(a(static_cast<std::size_t>(row1) - 1, static_cast<std::size_t>(t)))
                     * padded[static_cast<std::size_t>(t)];
            }
        }
        return acc;
    };

    ResultantXY out;
    out.x = Rat(r.coeffs[static_cast<std::size_t>(ij.i) - 1]) - row_dot(ij.i);
    out.y = Rat(r.coeffs[static_cast<std::size_t>(ij.j) - 1]) - row_dot(ij.j);
    out.lambda = std::move(*lambda);
    return out;
}

Rat resultant_from_xy(const QuadTriple& q, int n, IndexPair ij, const Rat& x,
                      const Rat& y)
{
    if (n < 1) {
        throw std::invalid_argument("resultant_from_xy: need degree >= 1");
    }
    ij.validate(n);
    const int k = ij.j - ij.i;

    const auto d = d_seq(q, k);
    const Int dk_minus_2 = (k >= 2) ? d[static_cast<std::size_t>(k) - 2] : Int(0);
    Int mid = d[static_cast<std::size_t>(k)] - Int(q.a) * Int(q.c) * dk_minus_2;
    if (k % 2 != 0) {
        mid = -mid;
    }

    Rat val = Rat(ipow(q.c, static_cast<unsigned long>(k))) * x * x
            + Rat(mid) * x * y
            + Rat(ipow(q.a, static_cast<unsigned long>(k))) * y * y;
    val *= Rat(ipow(q.a, static_cast<unsigned long>(ij.i - 1)));
    val *= Rat(ipow(q.c, static_cast<unsigned long>(n - ij.j + 1)));
    return val;
}

} // namespace resq
