#include "qcd/affine.hpp"

#include <cmath>
#include <stdexcept>

namespace qcd {

double affine_dilatation(const AffineMap& m) {
    const double na = std::abs(m.a);
    const double nb = std::abs(m.b);
    if (!(nb < na))
        throw std::domain_error(
            "affine_dilatation: |b| < |a| required for an "
            "orientation-preserving map");
    return (na + nb) / (na - nb);
}

AffineMap rect_extremal_map(const RectanglePair& p) {
    if (!(p.a1 > 0.0 && p.a2 > 0.0))
        throw std::domain_error("rect_extremal_map: modules must be positive");
    const double r = p.a2 / p.a1;
    return {0.5 * (1.0 + r), 0.5 * (r - 1.0)};
}

AffineMap ellipse_extremal_map(const Ellipse& e) {
    if (!(e.alpha > 0.0 && e.beta > 0.0))
        throw std::domain_error("ellipse_extremal_map: semi-axes must be positive");
    const double r = e.beta / e.alpha;
    return {complex(0.5 * (r + 1.0 / r), 0.0), complex(0.5 * (r - 1.0 / r), 0.0)};
}

} // namespace qcd
