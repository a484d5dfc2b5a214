#ifndef RESQ_RESULTANT_HPP
#define RESQ_RESULTANT_HPP

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "resq/exact_arith.hpp"
#include "resq/int_types.hpp"

namespace resq {

// R(x) = r_0 x^n + r_1 x^{n-1} + ... + r_n, coefficients in descending powers.
struct IntPoly {
    std::vector<Int> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const Int& leading() const { return coeffs.front(); }

    bool operator==(const IntPoly& o) const = default;

    // Pretty form like "x^3 - 2" for reports.
    std::string to_string() const;
};

IntPoly poly_from(const std::vector<long long>& coeffs);

// Q(x) = a x^2 + b x + c.
struct QuadTriple {
    long long a = 0;
    long long b = 0;
    long long c = 0;

    // b^2 - 4ac, overflow-checked.
    long long disc() const;

    QuadTriple negated() const { return {-a, -b, -c}; }

    bool operator==(const QuadTriple& o) const = default;
};

std::ostream& operator<<(std::ostream& os, const QuadTriple& q);

// Row pair removed from the banded matrix below; 1-based, 1 <= i < j <= n+1.
struct IndexPair {
    int i = 0;
    int j = 0;

    void validate(int n) const;
};

// The (k+2) x k banded matrix whose t-th column carries (a, b, c) starting in
// row t (1-based). Together with two shifted copies of the coefficients of R
// it assembles the resultant matrix.
ExactMatrix band_matrix(int k, const QuadTriple& q);

// band_matrix(k, q) with rows i and j removed (1-based, i < j <= k+2).
ExactMatrix band_matrix_minor(int k, int i, int j, const QuadTriple& q);

// The (n+2) x (n+2) resultant matrix for raw descending coefficients
// r = (r_0, ..., r_n): first two columns are (r, 0) and (0, r), the remaining
// n columns are band_matrix(n, q). No condition on r_0 here; the tests compare
// expanded formulas against this determinant on boxes that include r_0 = 0.
ExactMatrix resultant_matrix(const std::vector<Int>& r, const QuadTriple& q);

// Same, requiring an honest degree-n polynomial (r_0 != 0, n >= 1).
ExactMatrix sylvester_matrix(const IntPoly& r, const QuadTriple& q);

// Res(R, Q) is defined as det of sylvester_matrix with exactly this column
// layout; no external sign convention is imported. Satisfies
// Res(x^n, ax^2+bx+c) = c^n.
Int resultant(const IntPoly& r, const QuadTriple& q);

// The 13-term quintic expansion of Res(R, Q) for cubic R, evaluated directly.
Int resultant_cubic_expanded(const QuadTriple& q, const std::array<Int, 4>& r);

// d_0 = 1, d_1 = b, d_k = b d_{k-1} - ac d_{k-2}; d_k equals the k x k
// tridiagonal determinant with b on the diagonal, a above and c below, and
// also det band_matrix_minor(k, 1, k+2, q).
std::vector<Int> d_seq(const QuadTriple& q, int kmax);

// s_0 = 2, s_1 = b, s_k = b s_{k-1} - ac s_{k-2}; the power sum of the two
// roots of x^2 - bx + ac, so s_k = d_k - ac d_{k-2} for k >= 2. This is the
// integer route around the closed form in sqrt(b^2-4ac).
Int power_sum(const QuadTriple& q, int k);

// The pair (X, Y) produced by clearing all but rows i and j of the first
// column of the resultant matrix with a rational combination lambda of the
// banded columns, i.e. lambda solves
//     band_matrix_minor(n-1, i, j, q) lambda = (r with entries i, j removed).
struct ResultantXY {
    Rat x;
    Rat y;
    std::vector<Rat> lambda;
};

// nullopt exactly when the clearing system is singular; singular systems are
// reported, never guessed.
std::optional<ResultantXY> resultant_xy(const IntPoly& r, const QuadTriple& q,
                                        IndexPair ij);

// The factored form of the resultant in terms of (X, Y):
//   a^(i-1) c^(n-j+1) (c^k X^2 + (-1)^k (d_k - ac d_{k-2}) X Y + a^k Y^2),
// with k = j - i. Equals resultant(R, Q) whenever (X, Y) came from a
// non-singular resultant_xy run.
Rat resultant_from_xy(const QuadTriple& q, int n, IndexPair ij, const Rat& x,
                      const Rat& y);

} // namespace resq

#endif
