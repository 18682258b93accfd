#include "ratrel/geometry.hpp"

namespace ratrel {

GroupElement::GroupElement(Rational pa, Rational pb, Rational pc, Rational pd)
    : a(std::move(pa)), b(std::move(pb)), c(std::move(pc)), d(std::move(pd)) {
    if (determinant() <= 0)
        raise("BadMatrix", "group element needs positive determinant");
}

long element_order(const GroupElement& m) {
    if (m.is_projective_identity()) raise("IdentityElement", "order of the identity is undefined here");
    const Rational tau = m.trace() * m.trace() / m.determinant();
    if (tau == 0) return 2;
    if (tau == 1) return 3;
    if (tau == 2) return 4;
    if (tau == 3) return 6;
    if (tau == 4) return kInfiniteOrder; // parabolic
    if (tau > 4) raise("HyperbolicElement", "trace^2/det = " + to_string(tau) + " exceeds 4");
    raise("NonRecognizedOrder", "trace^2/det = " + to_string(tau) + " is not a vertex-stabilizer value");
}

ExactArea region_area(const FundamentalRegion& region) {
    const long r = static_cast<long>(region.generators.size());
    Rational sum(0);
    for (const GroupElement& g : region.generators) {
        const long order = element_order(g);
        if (order != kInfiniteOrder) sum += make_rational(1, order);
    }
    ExactArea area{Rational(r - 2) - sum};
    if (area.value <= 0)
        raise("NonPositiveArea", "area " + to_string(area.value) + "*pi is not positive");
    return area;
}

std::optional<long> relation_degree_bound(const ExactArea& a1, const ExactArea& a2) {
    const Rational ratio = a2.value / a1.value;
    if (!is_integer(ratio) || ratio < 1) return std::nullopt;
    return static_cast<long>(ratio.get_num().get_si());
}

} // namespace ratrel
