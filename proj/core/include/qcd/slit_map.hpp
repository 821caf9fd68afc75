#ifndef QCD_SLIT_MAP_HPP
#define QCD_SLIT_MAP_HPP

#include "qcd/types.hpp"

namespace qcd {

// Conformal equivalence phi between the unit disc slit along i[-s, s] and
// the round annulus { 1 < |w| < R }, normalized so that
//   phi(conj z) = conj(phi z),   phi(-z) = -phi(z),
//   phi(t) real positive for t in (0,1),  |phi| -> R on the unit circle.
// The two prime ends at the slit centre land on w = +/-1 and the slit tips
// on w = +/-i.
//
// Built from the elliptic-integral uniformization of the quarter domain:
// z -> z^2 -> half disc -> upper half-plane -> Legendre form -> rectangle,
// with elliptic modulus k = s^2 and log R = pi K(k') / (4 K(k)).
class SlitAnnulusMap {
public:
    double slit_half_length() const { return s_; }
    double outer_radius() const { return R_; }
    double log_outer_radius() const { return log_r_; }

    // Forward map; accepts the closed slit disc (|z| <= 1). Points on the
    // slit are evaluated at the prime end with Re z >= 0.
    complex map(complex z) const;

    // Inverse map; accepts the closed annulus 1 <= |w| <= R.
    complex inverse(complex w) const;

    // Complex derivative of the forward map at an interior point.
    complex derivative(complex z) const;

    friend SlitAnnulusMap build_slit_annulus_map(double s, double tol);

private:
    explicit SlitAnnulusMap(double s);

    complex map_quadrant(complex z) const;
    complex inverse_quadrant(complex w) const;
    complex derivative_quadrant(complex z) const;
    complex legendre_f(complex w) const;       // UHP branch of F(w, k)
    complex legendre_f_real(double t) const;   // rectangle-edge values

    double s_;      // slit half-length
    double k_;      // elliptic modulus, k = s^2
    double kq_;     // complete integral K(k)
    double kq_prime_; // complete integral K(k')
    double log_r_;
    double R_;
};

// Construct the map and verify its self-consistency (round-trip residual
// at probe points and the modulus identity) against tol.
SlitAnnulusMap build_slit_annulus_map(double s, double tol = 1e-9);

} // namespace qcd

#endif
