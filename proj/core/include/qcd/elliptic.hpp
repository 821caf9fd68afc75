#ifndef QCD_ELLIPTIC_HPP
#define QCD_ELLIPTIC_HPP

#include "qcd/types.hpp"

namespace qcd {

// Default relative tolerance for the arithmetic-geometric iteration.
inline constexpr double agm_default_tol = 1e-15;

// Common limit of the arithmetic-geometric mean iteration.
// Requires a > 0, b >= 0; converges quadratically.
double agm(double a, double b, double rel_tol = agm_default_tol);

// Elliptic modulus k with cached complementary modulus k' = sqrt(1-k^2).
struct EllipticModulus {
    double k;
    double k_prime;

    static EllipticModulus from_k(double k);
};

// Complete elliptic integral of the first kind, K(k) = pi / (2 agm(1, k')).
// Domain: 0 <= k < 1.
double complete_elliptic_k(double k);

// Carlson symmetric integral R_F. The complex overload expects arguments
// off the negative real axis; exactly-real nonnegative triples are fine.
double carlson_rf(double x, double y, double z);
complex carlson_rf(complex x, complex y, complex z);

// Incomplete elliptic integral of the first kind, Legendre form,
// F(phi, k) = int_0^phi dt / sqrt(1 - k^2 sin^2 t), for real phi in
// [-pi/2, pi/2] and 0 <= k < 1.
double elliptic_f(double phi, double k);

// Real Jacobi elliptic functions sn, cn, dn evaluated together.
struct JacobiTriple {
    double sn, cn, dn;
};
JacobiTriple jacobi_elliptic(double u, double k);

// Jacobi sn for complex argument (addition formula over the real values).
// Poles of sn map to complex infinity.
complex jacobi_sn(complex u, double k);

} // namespace qcd

#endif
