#ifndef RESQ_CONIC_HPP
#define RESQ_CONIC_HPP

#include <array>
#include <optional>
#include <ostream>

#include "resq/int_types.hpp"
#include "resq/resultant.hpp"

namespace resq {

// q1 X^2 + q2 XY + q3 Y^2 = m Z^2, projective.
struct TernaryConic {
    Int q1, q2, q3, m;

    bool operator==(const TernaryConic& o) const = default;
    // X^2 - D Y^2 = c Z^2 shape.
    bool is_normal_form() const { return q1 == 1 && q2 == 0; }
};

std::ostream& operator<<(std::ostream& os, const TernaryConic& c);

// The normal-form conic X^2 - (b^2 - 4ac) Y^2 = c Z^2 attached to Q.
TernaryConic conic_C(const QuadTriple& q);

// The general family indexed by 1 <= i < j <= n+1 (n odd), with k = j - i:
//   c^k X^2 + (-1)^k (d_k - ac d_{k-2}) XY + a^k Y^2 = a^(i-1) c^(n-j+1) Z^2.
// For (i,j) = (1,2) this is conic_C up to the usual change of variables.
TernaryConic conic_Cij(const QuadTriple& q, int n, IndexPair ij);

// Decides existence of a rational point on a normal-form conic: true iff the
// Hilbert symbol (D, c) is +1 at infinity and at every prime dividing 2Dc.
// Square (or zero) D is split and always soluble; c = 0 is rejected.
bool has_rational_point(const TernaryConic& c);

// Membership in the solubility sieve: every prime dividing b^2 - 4ac exactly
// once must have (c/p) != -1. Necessary for conic_C to have a rational point.
bool omega_member(const QuadTriple& q);

struct ConicPoint {
    long long x = 0, y = 0, z = 0;

    bool operator==(const ConicPoint& o) const = default;
};

std::ostream& operator<<(std::ostream& os, const ConicPoint& p);

// Bounded search for an integral point with Y != 0 and all coordinates of
// absolute value <= height; returns the smallest-height point found, ties
// broken lexicographically. Pure enumeration -- this is the independent
// counterpart of has_rational_point, not a consumer of it.
std::optional<ConicPoint> find_point(const TernaryConic& c, long long height);

// Conservative search bound 4|Dc| + 4 used by the sweeps.
long long default_point_height(const TernaryConic& c);

struct ResultantWitness {
    std::array<Int, 3> point;  // primitive integral point, exact
    TernaryConic conic;        // conic_C for the (possibly negated) triple
    QuadTriple used;           // (a,b,c) after the sign reduction
    bool negated = false;      // true if Res was -1 and the triple was negated
    IndexPair ij;              // index pair whose clearing system was used
};

// Converts Res(R, Q) = +-1 (R of odd degree) into an explicit rational point
// on conic_C: the column-clearing pair (X, Y) at (1,2) satisfies
// c^(n-1)(c X^2 - b XY + a Y^2) = 1, and completing the square gives a point
// on X^2 - D Y^2 = c Z^2 after clearing denominators. Res = -1 is reduced to
// Res = +1 by negating (a,b,c), which fixes D and flips c. Falls back to the
// (1,3) system if (1,2) is singular; nullopt if both are.
std::optional<ResultantWitness> witness_point_from_resultant(const IntPoly& r,
                                                             const QuadTriple& q);

} // namespace resq

#endif
