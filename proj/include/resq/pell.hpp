#ifndef RESQ_PELL_HPP
#define RESQ_PELL_HPP

#include <array>
#include <optional>
#include <ostream>
#include <vector>

#include "resq/int_types.hpp"
#include "resq/resultant.hpp"

namespace resq {

// q1 x^2 + q2 xy + q3 y^2 = n over the integers.
struct PellEquation {
    Int q1, q2, q3, n;

    bool operator==(const PellEquation& o) const = default;
};

std::ostream& operator<<(std::ostream& os, const PellEquation& e);

// The three integer-variable equations a cubic witness of Res = 1 must solve:
//   c x^2 -          b xy +   a y^2 = c^2
// c^2 x^2 + (b^2 - 2ac) xy + a^2 y^2 = b^2 c
// c^3 x^2 - (b^3 - 3abc) xy + a^3 y^2 = (b^2 - ac)^2
std::array<PellEquation, 3> cubic_conics(const QuadTriple& q);

// All integer solutions with |x|, |y| <= height, in lexicographic (x, y)
// order. Bounded enumeration only; deciding solubility of a generalised Pell
// equation outright is not attempted here.
std::vector<std::pair<long long, long long>>
solve_bqf_diophantine(const PellEquation& e, long long height);

// First R of the given odd degree with |r_i| <= coeff_bound, r_0 >= 1 and
// Res(R, Q) = +-1, in lexicographic coefficient order (r_0 ascending from 1;
// negating R fixes the resultant, so r_0 < 0 is redundant). nullopt when the
// box is exhausted.
std::optional<IntPoly> find_R(const QuadTriple& q, int degree,
                              long long coeff_bound);

} // namespace resq

#endif
