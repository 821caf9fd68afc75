#ifndef QCD_MODULUS_HPP
#define QCD_MODULUS_HPP

namespace qcd {

// Module of a doubly-connected domain, (1/2pi) log of the radius ratio of
// the conformally equivalent round annulus.
struct RingModule {
    double value;
};

// Module of a quadrilateral: side ratio of the conformally equivalent
// rectangle with vertical side 1.
struct QuadModule {
    double m;
};

// mu(r) = (pi/2) K(sqrt(1-r^2)) / K(r), the module of the unit disc slit
// along [0, r], times 2pi. Strictly decreasing on (0,1).
double grotzsch_mu(double r);

// Phi(R) = exp(mu(1/R)) for R > 1; satisfies R < Phi(R) < 4R and
// Phi(R) - 4R -> 0 as R grows.
double grotzsch_phi(double R);

// Module of the round annulus r_in < |z| < r_out.
RingModule annulus_module(double r_in, double r_out);

// Module of the quadrilateral given by the upper half-plane with marked
// boundary points 0, 1, lambda, infinity (in that order), lambda > 1.
QuadModule quad_module_from_crossratio(double lambda);

} // namespace qcd

#endif
