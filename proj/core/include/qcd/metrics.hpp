#ifndef QCD_METRICS_HPP
#define QCD_METRICS_HPP

#include "qcd/types.hpp"

namespace qcd {

// Pair of interior points with their pseudo-hyperbolic distance
// rho = |(z1 - z2) / (1 - conj(z1) z2)|.
struct DiscPointPair {
    complex z1;
    complex z2;
    double rho;
};

DiscPointPair make_point_pair(complex z1, complex z2);

// Pseudo-hyperbolic distance of two interior points.
double pseudo_hyperbolic(complex z1, complex z2);

// Hyperbolic distance at curvature -1: log((1+rho)/(1-rho)).
double hyperbolic_distance(complex z1, complex z2);

// d(z1,z2) = (1/2) log K(rho(z1,z2)), the extremal dilatation of the
// boundary-fixing map carrying z1 to z2.
double kra_distance(complex z1, complex z2);

// Teichmueller shift between arbitrary interior points: conjugate of the
// normalized extremal map by the disc automorphism M with M(z1) = 0 and
// M(z2) on the negative real axis. Sends z1 to z2, fixes the circle.
complex shift_between(complex z1, complex z2, complex z, double tol = 1e-9);

// Gehring displacement: the largest hyperbolic distance a boundary-fixing
// K-quasiconformal self-map of the disc can move a point; realized by the
// shift with K(x*) = K, so h = d_hyp(0, x*).
double gehring_h(double K, double tol = 1e-12);

} // namespace qcd

#endif
