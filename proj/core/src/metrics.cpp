#include "qcd/metrics.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "qcd/errors.hpp"
#include "qcd/shift.hpp"

namespace qcd {

namespace {

void require_interior(complex z, const char* who) {
    if (!(std::abs(z) < 1.0))
        throw std::domain_error(std::string(who) +
                                ": points must lie inside the unit disc");
}

// shared ShiftMap instances keyed by (rho, tol)
std::shared_ptr<const ShiftMap> cached_shift(double rho, double tol) {
    static std::mutex mu;
    static std::map<std::pair<double, double>, std::shared_ptr<const ShiftMap>>
        cache;
    const std::scoped_lock lock(mu);
    auto& slot = cache[{rho, tol}];
    if (!slot) slot = std::make_shared<const ShiftMap>(build_shift(rho, tol));
    return slot;
}

} // namespace

double pseudo_hyperbolic(complex z1, complex z2) {
    require_interior(z1, "pseudo_hyperbolic");
    require_interior(z2, "pseudo_hyperbolic");
    // quotient of magnitudes rather than magnitude of the quotient, so
    // that swapping the arguments gives the identical double
    return std::abs(z1 - z2) / std::abs(1.0 - std::conj(z1) * z2);
}

DiscPointPair make_point_pair(complex z1, complex z2) {
    return {z1, z2, pseudo_hyperbolic(z1, z2)};
}

double hyperbolic_distance(complex z1, complex z2) {
    const double rho = pseudo_hyperbolic(z1, z2);
    return std::log1p(rho) - std::log1p(-rho);
}

double kra_distance(complex z1, complex z2) {
    const double rho = pseudo_hyperbolic(z1, z2);
    if (rho == 0.0) return 0.0;
    return 0.5 * std::log(shift_dilatation(rho));
}

complex shift_between(complex z1, complex z2, complex z, double tol) {
    require_interior(z1, "shift_between");
    require_interior(z2, "shift_between");
    if (!(std::abs(z) <= 1.0 + 1e-12))
        throw std::domain_error("shift_between: z must lie in the closed disc");
    if (z1 == z2)
        throw std::domain_error("shift_between: degenerate pair z1 == z2");

    // M(z) = e^{ia} (z - z1)/(1 - conj(z1) z) with M(z2) = -rho real
    const complex base = (z2 - z1) / (1.0 - std::conj(z1) * z2);
    const double rho = std::abs(base);
    const complex phase = -rho / base; // M(z2) = phase * base = -rho
    const auto f = cached_shift(rho, tol);

    const complex mz = phase * (z - z1) / (1.0 - std::conj(z1) * z);
    const complex fz = evaluate_shift(*f, mz);
    const complex back = fz / phase;
    return (back + z1) / (1.0 + std::conj(z1) * back);
}

double gehring_h(double K, double tol) {
    if (!(K > 1.0))
        throw std::domain_error("gehring_h: K must exceed 1");
    if (!(tol > 0.0)) throw std::domain_error("gehring_h: tol must be positive");

    // K(x) is strictly increasing from 1 to infinity on (0,1);
    // bracketed bisection with the tolerance measured on K
    double lo = 1e-300, hi = 1.0 - 1e-16;
    double xm = 0.5;
    for (int i = 0; i < 400; ++i) {
        xm = 0.5 * (lo + hi);
        const double Km = shift_dilatation(xm);
        if (std::abs(Km - K) <= tol * K) break;
        (Km < K ? lo : hi) = xm;
        if (hi - lo <= 1e-17 * hi) break;
    }
    const double Km = shift_dilatation(xm);
    if (std::abs(Km - K) > std::max(tol, 1e-9) * K)
        throw convergence_error("gehring_h: root finder did not converge",
                                std::abs(Km - K));
    return hyperbolic_distance(0.0, xm);
}

} // namespace qcd
