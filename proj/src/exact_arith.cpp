#include "resq/exact_arith.hpp"

#include <stdexcept>
#include <utility>

namespace resq {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows)
    , cols_(cols)
    , e_(rows * cols)
{
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("ExactMatrix: empty shape");
    }
    if (rows > kMaxMatrixDim || cols > kMaxMatrixDim) {
        throw std::invalid_argument("ExactMatrix: dimension cap exceeded");
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n)
{
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Int& ExactMatrix::operator()(std::size_t i, std::size_t j)
{
    if (i >= rows_ || j >= cols_) {
        throw std::out_of_range("ExactMatrix: index out of range");
    }
    return e_[i * cols_ + j];
}

const Int& ExactMatrix::operator()(std::size_t i, std::size_t j) const
{
    if (i >= rows_ || j >= cols_) {
        throw std::out_of_range("ExactMatrix: index out of range");
    }
    return e_[i * cols_ + j];
}

void ExactMatrix::swap_rows(std::size_t i, std::size_t j)
{
    if (i >= rows_ || j >= rows_) {
        throw std::out_of_range("ExactMatrix: row index out of range");
    }
    if (i == j) {
        return;
    }
    for (std::size_t k = 0; k < cols_; ++k) {
        std::swap(e_[i * cols_ + k], e_[j * cols_ + k]);
    }
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << (j == 0 ? "[" : ", ") << m(i, j);
        }
        os << "]" << (i + 1 == m.rows() ? "]" : "\n");
    }
    return os;
}

namespace {

// One fraction-free elimination pass. Returns false when the matrix is
// singular. On success w is upper triangular with w(n-1, n-1) = +-det, and
// sign_out carries the row-swap sign. Extra columns (if any) are carried
// along, which is how the linear solver reuses this.
bool bareiss_forward(ExactMatrix& w, std::size_t n, int& sign_out)
{
    int sign = 1;
    Int prev(1);
    Int t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && w(piv, k) == 0) {
            ++piv;
        }
        if (piv == n) {
            return false;
        }
        if (piv != k) {
            w.swap_rows(piv, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < w.cols(); ++j) {
                t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    sign_out = sign;
    return w(n - 1, n - 1) != 0;
}

} // namespace

Int det_exact(const ExactMatrix& m)
{
    if (!m.is_square()) {
        throw std::invalid_argument("det_exact: matrix must be square");
    }
    const std::size_t n = m.rows();
    if (n == 1) {
        return m(0, 0);
    }
    ExactMatrix w = m;
    int sign = 1;
    if (!bareiss_forward(w, n, sign)) {
        return Int(0);
    }
    return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

std::optional<ExactVector> solve_linear_exact(const ExactMatrix& a,
                                              const std::vector<Int>& v)
{
    if (!a.is_square()) {
        throw std::invalid_argument("solve_linear_exact: matrix must be square");
    }
    const std::size_t n = a.rows();
    if (v.size() != n) {
        throw std::invalid_argument("solve_linear_exact: dimension mismatch");
    }

    ExactMatrix w(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            w(i, j) = a(i, j);
        }
        w(i, n) = v[i];
    }

    int sign = 1;
    if (n > 1) {
        if (!bareiss_forward(w, n, sign)) {
            return std::nullopt;
        }
    } else if (w(0, 0) == 0) {
        return std::nullopt;
    }

    ExactVector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rat acc(w(ii, n));
        for (std::size_t j = ii + 1; j < n; ++j) {
            acc -= Rat(w(ii, j)) * x[j];
        }
        x[ii] = acc / Rat(w(ii, ii));
    }
    return x;
}

} // namespace resq
