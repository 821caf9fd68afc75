#ifndef QCD_AFFINE_HPP
#define QCD_AFFINE_HPP

#include "qcd/types.hpp"

namespace qcd {

// Real-linear map z -> a z + b conj(z), orientation-preserving (|b| < |a|).
struct AffineMap {
    complex a;
    complex b;

    complex operator()(complex z) const { return a * z + b * std::conj(z); }
};

// Ellipse centred at the origin with horizontal semi-axis alpha and
// vertical semi-axis beta.
struct Ellipse {
    double alpha;
    double beta;
};

// Pair of rectangle modules (rectangles normalized to vertical side 1).
struct RectanglePair {
    double a1;
    double a2;
};

// Quasiconformal dilatation (|a|+|b|)/(|a|-|b|) of an affine map.
double affine_dilatation(const AffineMap& m);

// Side-preserving map [0,a1]x[0,1] -> [0,a2]x[0,1] of least dilatation:
// the horizontal stretch z -> (1+a2/a1)/2 z + (a2/a1-1)/2 conj(z).
AffineMap rect_extremal_map(const RectanglePair& p);

// Least-dilatation map E(alpha,beta) -> E(beta,alpha) matching the
// boundary correspondence of the axis swap x+iy -> (beta/alpha)x + i(alpha/beta)y.
// Its dilatation is max(alpha^2/beta^2, beta^2/alpha^2).
AffineMap ellipse_extremal_map(const Ellipse& e);

} // namespace qcd

#endif
