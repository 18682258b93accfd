#ifndef RATREL_GEOMETRY_HPP
#define RATREL_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "ratrel/rational.hpp"

namespace ratrel {

// 2x2 matrix with positive determinant acting on the upper half plane,
// considered projectively.
struct GroupElement {
    Rational a, b, c, d;

    GroupElement(Rational pa, Rational pb, Rational pc, Rational pd);

    Rational trace() const { return a + d; }
    Rational determinant() const { return a * d - b * c; }
    bool is_projective_identity() const { return b == 0 && c == 0 && a == d; }
};

struct FundamentalRegion {
    std::vector<GroupElement> generators; // vertex stabilizers, length >= 3
};

// Hyperbolic area as an exact rational multiple of pi.
struct ExactArea {
    Rational value; // coefficient of pi, positive for a valid region
};

inline constexpr long kInfiniteOrder = 0;

// Order of a vertex stabilizer from tau = trace^2 / det:
// 0 -> 2, 1 -> 3, 2 -> 4, 3 -> 6, 4 -> infinity (returned as kInfiniteOrder).
// Errors: IdentityElement, HyperbolicElement (tau > 4), NonRecognizedOrder.
long element_order(const GroupElement& m);

// (r-2)*pi - sum pi/e_i with parabolic generators contributing zero.
// Errors propagate from element_order; NonPositiveArea when the result
// is not positive.
ExactArea region_area(const FundamentalRegion& region);

// a2/a1 when that ratio is a positive integer, nullopt otherwise.
std::optional<long> relation_degree_bound(const ExactArea& a1, const ExactArea& a2);

} // namespace ratrel

#endif
