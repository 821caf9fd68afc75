#ifndef QCD_LAPLACE_HPP
#define QCD_LAPLACE_HPP

#include <variant>
#include <vector>

namespace qcd {

// Scalar field sampled on a rectangular lattice (nx columns, ny rows).
struct GridField {
    int nx = 0;
    int ny = 0;
    double x0 = 0.0, y0 = 0.0; // origin
    double dx = 0.0, dy = 0.0; // spacing per axis
    std::vector<double> values;

    double& at(int i, int j) { return values[static_cast<size_t>(j) * nx + i]; }
    double at(int i, int j) const {
        return values[static_cast<size_t>(j) * nx + i];
    }
};

// Ring domains understood by the module oracle.
struct AnnulusDomain {
    double r_in;
    double r_out;
};
struct GrotzschRingDomain {
    double r; // unit disc slit along [0, r]
};
struct SlitDiscDomain {
    double s; // unit disc slit along i[-s, s]
};
using RingDomain = std::variant<AnnulusDomain, GrotzschRingDomain, SlitDiscDomain>;

// Module of a ring domain by a 5-point Laplace solve for the harmonic
// potential (0 on the inner boundary component, 1 on the outer) followed
// by flux integration. Grids are uniform in the chart where the domain
// boundaries are grid-aligned: (log r, theta) for the annulus, (r, theta)
// for the slit domains. n is the radial resolution, n >= 32.
double laplace_ring_module(const RingDomain& domain, int n);

// Harmonic potential of the given configuration on its chart grid,
// exposed for oracles that reconstruct the conformal map from the grid
// solution (harmonic conjugate by integration).
GridField laplace_ring_potential(const RingDomain& domain, int n);

} // namespace qcd

#endif
