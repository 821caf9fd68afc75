#ifndef QCD_VERIFY_HPP
#define QCD_VERIFY_HPP

#include <array>
#include <functional>
#include <vector>

#include "qcd/types.hpp"

namespace qcd {

using DiscMapFn = std::function<complex(complex)>;

// Pointwise quasiconformal dilatation (|f_z|+|f_zb|)/(|f_z|-|f_zb|) of a
// black-box map, estimated by central finite differences at step h.
double measured_dilatation(const DiscMapFn& map, complex z, double h = 1e-5);

// Piecewise-linear self-map of the triangulated disc: boundary vertices
// pinned to themselves, interior vertex 0 is the centre.
struct TriangulatedDiscMap {
    std::vector<complex> vertices;
    std::vector<complex> images;
    std::vector<std::array<int, 3>> triangles;
    int boundary_start = 0; // vertices[boundary_start..] lie on the circle

    // dilatation of the affine map of one triangle; negative orientation
    // reported as infinity
    double triangle_dilatation(int t) const;
    double max_dilatation() const;
};

// Deterministic concentric triangulation with `rings` rings; images start
// from the discrete harmonic extension of (boundary fixed, centre at -x).
TriangulatedDiscMap make_disc_mesh(int rings, double x);

// Desk-scale realization of the extremal problem: minimize the maximum
// per-triangle dilatation over interior vertex images, boundary fixed and
// the centre pinned at -x. Deterministic coordinate descent on a softmax
// surrogate with decreasing temperature; returns the final true maximum.
double discrete_min_dilatation(double x, int mesh_refinement);

enum class CompetitorFamily {
    radial_bump,  // z - x g(|z|/rho) with a quartic bump g
    mobius_patch, // identity blended with the Moebius shift inside |z| < sigma
};

// Max measured dilatation of each hand-built boundary-fixing competitor
// moving 0 to -x, one entry per support parameter.
std::vector<double> competitor_dilatation_sweep(
    double x, CompetitorFamily family, const std::vector<double>& supports);

// Support parameters used by default sweeps (documented seed points).
std::vector<double> default_competitor_supports(CompetitorFamily family);

// The competitor map itself, exposed so tests can measure it directly.
DiscMapFn competitor_map(double x, CompetitorFamily family, double support);

} // namespace qcd

#endif
