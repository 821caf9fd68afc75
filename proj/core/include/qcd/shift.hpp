#ifndef QCD_SHIFT_HPP
#define QCD_SHIFT_HPP

#include "qcd/slit_map.hpp"
#include "qcd/types.hpp"

namespace qcd {

enum class JoukowskiSign { minus, plus };

// w -> w - 1/w (minus) or w -> w + 1/w (plus).
complex joukowski(JoukowskiSign sign, complex w);

// Branch with |result| >= 1. On the degenerate slit (both candidates on
// the unit circle) the choice is ambiguous and a branch_error is thrown
// carrying both candidates.
complex joukowski_inverse(JoukowskiSign sign, complex v);

// Lifted affine map between the two ellipses E(R-1/R, R+1/R) and
// E(R+1/R, R-1/R):  x+iy -> ((R+1/R)/(R-1/R)) x + i ((R-1/R)/(R+1/R)) y.
complex lifted_affine(double R, complex zeta);

// Two-sheeted branched coverings p1 : E1 -> disc (branch point 0) and
// p2 : E2 -> disc (branch point -x), p_i = (phi^{-1} o f_i^{-1})^2.
complex covering_p(int index, const SlitAnnulusMap& map, complex zeta);

// Extremal displacement map of the disc: boundary pointwise fixed,
// 0 -> -x, dilatation K = ((Phi(1/x)+1)/(Phi(1/x)-1))^2.
class ShiftMap {
public:
    double displacement() const { return x_; }
    double outer_radius() const { return phi_.outer_radius(); }
    double dilatation() const { return dilatation_; }
    const SlitAnnulusMap& slit_map() const { return phi_; }

    friend ShiftMap build_shift(double x, double tol);

private:
    ShiftMap(double x, SlitAnnulusMap phi);

    double x_;
    double dilatation_;
    SlitAnnulusMap phi_;
};

// Extremal dilatation K(x) as a scalar function (no map construction).
double shift_dilatation(double x);

ShiftMap build_shift(double x, double tol = 1e-9);

// Evaluate the extremal map at |z| <= 1 through the covering pipeline
// p2(lifted_affine(p1^{-1}(z))); the square-root branch entering p1^{-1}
// does not affect the value.
complex evaluate_shift(const ShiftMap& f, complex z);

// Same pipeline started from an explicit square root of z (root^2 = z);
// exists so the branch-independence contract can be exercised directly.
complex evaluate_shift_from_root(const ShiftMap& f, complex root);

// Pointwise Beltrami data of the shift map measured by central finite
// differences at step h, together with the quadratic-differential value
// q = ((p1^{-1})')^2 at the same point.
struct BeltramiSample {
    complex z;
    complex mu;
    complex q;
};
BeltramiSample beltrami_of_shift(const ShiftMap& f, complex z, double h = 1e-5);

// Displacement bound 2(sqrt(K) - 1) for boundary-fixing K-quasiconformal
// self-maps of the disc.
double displacement_bound(double K);

} // namespace qcd

#endif
