#include "qcd/modulus.hpp"

#include <cmath>
#include <stdexcept>

#include "qcd/elliptic.hpp"
#include "qcd/types.hpp"

namespace qcd {

double grotzsch_mu(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("grotzsch_mu: r must lie in (0,1)");
    // (pi/2) K(r') / K(r) written through the AGM directly, which stays
    // finite even when r' rounds to 1
    const double rp = std::sqrt((1.0 - r) * (1.0 + r));
    return (pi / 2.0) * agm(1.0, rp) / agm(1.0, r);
}

double grotzsch_phi(double R) {
    if (!(R > 1.0))
        throw std::domain_error("grotzsch_phi: R must exceed 1");
    return std::exp(grotzsch_mu(1.0 / R));
}

RingModule annulus_module(double r_in, double r_out) {
    if (!(r_in > 0.0) || !(r_out > r_in))
        throw std::domain_error("annulus_module: requires 0 < r_in < r_out");
    return {std::log(r_out / r_in) / (2.0 * pi)};
}

QuadModule quad_module_from_crossratio(double lambda) {
    if (!(lambda > 1.0))
        throw std::domain_error(
            "quad_module_from_crossratio: lambda must exceed 1");
    // Reduce to the Legendre configuration (-1/k, -1, 1, 1/k): the Moebius
    // map fixing the configuration order gives lambda = ((1+k)/(1-k))^2.
    const double sq = std::sqrt(lambda);
    const double k = (sq - 1.0) / (sq + 1.0);
    const auto m = EllipticModulus::from_k(k);
    return {2.0 * complete_elliptic_k(m.k) / complete_elliptic_k(m.k_prime)};
}

} // namespace qcd
