#include "qcd/shift.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcd/errors.hpp"
#include "qcd/modulus.hpp"

namespace qcd {

namespace {

// deterministic |w| >= 1 branch; ties on the unit circle resolved by
// lexicographic order (Re, then Im)
complex joukowski_inverse_any(JoukowskiSign sign, complex v) {
    const double c = sign == JoukowskiSign::minus ? -1.0 : 1.0;
    // w^2 - v w + c = 0
    const complex rt = std::sqrt(v * v - 4.0 * c);
    const complex w1 = 0.5 * (v + rt);
    const complex w2 = 0.5 * (v - rt);
    const double n1 = std::abs(w1), n2 = std::abs(w2);
    if (std::abs(n1 - n2) > 1e-14 * (n1 + n2)) return n1 > n2 ? w1 : w2;
    if (w1.real() != w2.real()) return w1.real() > w2.real() ? w1 : w2;
    return w1.imag() > w2.imag() ? w1 : w2;
}

bool inside_ellipse(complex z, double a, double b, double slack) {
    const double qx = z.real() / a, qy = z.imag() / b;
    return qx * qx + qy * qy <= 1.0 + slack;
}

} // namespace

complex joukowski(JoukowskiSign sign, complex w) {
    if (w == complex(0.0, 0.0))
        throw std::domain_error("joukowski: w must be nonzero");
    return sign == JoukowskiSign::minus ? w - 1.0 / w : w + 1.0 / w;
}

complex joukowski_inverse(JoukowskiSign sign, complex v) {
    const double c = sign == JoukowskiSign::minus ? -1.0 : 1.0;
    const complex rt = std::sqrt(v * v - 4.0 * c);
    const complex w1 = 0.5 * (v + rt);
    const complex w2 = 0.5 * (v - rt);
    const double n1 = std::abs(w1), n2 = std::abs(w2);
    if (std::abs(n1 - n2) <= 1e-12 * (n1 + n2) && std::abs(w1 - w2) > 1e-12)
        throw branch_error("joukowski_inverse: branches collide on the slit",
                           w1, w2);
    return n1 >= n2 ? w1 : w2;
}

complex lifted_affine(double R, complex zeta) {
    if (!(R > 1.0))
        throw std::domain_error("lifted_affine: R must exceed 1");
    const double ratio = (R + 1.0 / R) / (R - 1.0 / R);
    return {ratio * zeta.real(), zeta.imag() / ratio};
}

complex covering_p(int index, const SlitAnnulusMap& map, complex zeta) {
    if (index != 1 && index != 2)
        throw std::domain_error("covering_p: index must be 1 or 2");
    const double R = map.outer_radius();
    const double ax = index == 1 ? R - 1.0 / R : R + 1.0 / R;
    const double ay = index == 1 ? R + 1.0 / R : R - 1.0 / R;
    if (!inside_ellipse(zeta, ax, ay, 1e-9))
        throw std::domain_error("covering_p: point outside the closed ellipse");
    const auto sign = index == 1 ? JoukowskiSign::minus : JoukowskiSign::plus;
    complex w = joukowski_inverse_any(sign, zeta);
    // guard roundoff outside the closed annulus
    const double aw = std::abs(w);
    if (aw < 1.0) w *= 1.0 / aw;
    if (aw > R) w *= R / aw;
    const complex z = map.inverse(w);
    return z * z;
}

double shift_dilatation(double x) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("shift_dilatation: x must lie in (0,1)");
    // ((Phi+1)/(Phi-1))^2 with Phi(1/x) = exp(mu(x)), i.e. coth(mu/2)^2,
    // which survives exp overflow for tiny x
    const double c = 1.0 / std::tanh(0.5 * grotzsch_mu(x));
    return c * c;
}

ShiftMap::ShiftMap(double x, SlitAnnulusMap phi)
    : x_(x), dilatation_(shift_dilatation(x)), phi_(std::move(phi)) {}

ShiftMap build_shift(double x, double tol) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("build_shift: x must lie in (0,1)");
    return ShiftMap(x, build_slit_annulus_map(std::sqrt(x), tol));
}

complex evaluate_shift_from_root(const ShiftMap& f, complex root) {
    if (!(std::abs(root) <= 1.0 + 1e-12))
        throw std::domain_error("evaluate_shift: point outside the disc");
    const SlitAnnulusMap& phi = f.slit_map();
    const double R = f.outer_radius();
    const complex w = phi.map(root);
    const complex v1 = joukowski(JoukowskiSign::minus, w);
    const complex v2 = lifted_affine(R, v1);
    complex y = joukowski_inverse_any(JoukowskiSign::plus, v2);
    const double ay = std::abs(y);
    if (ay < 1.0) y *= 1.0 / ay;
    if (ay > R) y *= R / ay;
    const complex zy = phi.inverse(y);
    return zy * zy;
}

complex evaluate_shift(const ShiftMap& f, complex z) {
    if (!(std::abs(z) <= 1.0 + 1e-12))
        throw std::domain_error("evaluate_shift: point outside the disc");
    return evaluate_shift_from_root(f, std::sqrt(z));
}

BeltramiSample beltrami_of_shift(const ShiftMap& f, complex z, double h) {
    if (!(h > 0.0))
        throw std::domain_error("beltrami_of_shift: h must be positive");
    const double margin = 10.0 * h;
    if (!(std::abs(z) < 1.0 - margin))
        throw std::domain_error("beltrami_of_shift: point too close to the circle");
    const double dx = std::clamp(z.real(), -f.displacement(), 0.0) - z.real();
    const double seg = std::hypot(dx, z.imag());
    if (!(seg >= margin))
        throw std::domain_error(
            "beltrami_of_shift: point too close to the critical segment");

    const complex fe = (evaluate_shift(f, z + h) - evaluate_shift(f, z - h)) /
                       (2.0 * h);
    const complex fn =
        (evaluate_shift(f, z + complex(0.0, h)) -
         evaluate_shift(f, z - complex(0.0, h))) /
        (2.0 * h);
    const complex fz = 0.5 * (fe - complex(0.0, 1.0) * fn);
    const complex fzb = 0.5 * (fe + complex(0.0, 1.0) * fn);
    const double jac = std::norm(fz) - std::norm(fzb);
    if (!(jac > 0.0))
        throw std::runtime_error(
            "beltrami_of_shift: nonpositive Jacobian estimate (step too "
            "large near a singularity)");

    // quadratic differential q = ((p1^{-1})')^2 by central differences of
    // the lift g(z) = f1(phi(sqrt z)) along a locally continuous branch
    const SlitAnnulusMap& phi = f.slit_map();
    const complex ref = std::sqrt(z);
    auto lift = [&](complex p) {
        return joukowski(JoukowskiSign::minus, phi.map(sqrt_near(p, ref)));
    };
    const complex ge = (lift(z + h) - lift(z - h)) / (2.0 * h);
    const complex gn =
        (lift(z + complex(0.0, h)) - lift(z - complex(0.0, h))) / (2.0 * h);
    const complex gz = 0.5 * (ge - complex(0.0, 1.0) * gn);
    return {z, fzb / fz, gz * gz};
}

double displacement_bound(double K) {
    if (!(K >= 1.0))
        throw std::domain_error("displacement_bound: K must be at least 1");
    return 2.0 * (std::sqrt(K) - 1.0);
}

} // namespace qcd
