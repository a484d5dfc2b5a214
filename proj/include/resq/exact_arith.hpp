#ifndef RESQ_EXACT_ARITH_HPP
#define RESQ_EXACT_ARITH_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "resq/int_types.hpp"

namespace resq {

// Largest supported dimension. Everything in this project lives far below it;
// anything bigger is a caller bug and is rejected loudly.
inline constexpr std::size_t kMaxMatrixDim = 64;

// Dense integer matrix with arbitrary-precision entries, row-major.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols);

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j);
    const Int& operator()(std::size_t i, std::size_t j) const;

    void swap_rows(std::size_t i, std::size_t j);

    bool operator==(const ExactMatrix& o) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> e_;
};

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

using ExactVector = std::vector<Rat>;

// Exact determinant by fraction-free (Bareiss) elimination: every intermediate
// value is an integer minor of the input, so no rational arithmetic is needed.
Int det_exact(const ExactMatrix& m);

// Exact solution of A x = v over the rationals, or nullopt when det A = 0.
// Singular systems are never "solved" approximately, even when consistent.
std::optional<ExactVector> solve_linear_exact(const ExactMatrix& a,
                                              const std::vector<Int>& v);

} // namespace resq

#endif
