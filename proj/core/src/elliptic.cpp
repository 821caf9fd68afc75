#include "qcd/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qcd {

double agm(double a, double b, double rel_tol) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::domain_error("agm: non-finite input");
    if (a <= 0.0 || b < 0.0)
        throw std::domain_error("agm: requires a > 0 and b >= 0");
    if (b == 0.0) return 0.0;
    for (int i = 0; i < 64; ++i) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        a = an;
        b = bn;
        if (std::abs(a - b) <= rel_tol * a) break;
    }
    return 0.5 * (a + b);
}

EllipticModulus EllipticModulus::from_k(double k) {
    if (!(k >= 0.0 && k < 1.0))
        throw std::domain_error("EllipticModulus: k must lie in [0,1)");
    // (1-k)(1+k) avoids cancellation as k -> 1
    return {k, std::sqrt((1.0 - k) * (1.0 + k))};
}

double complete_elliptic_k(double k) {
    if (!(k >= 0.0 && k < 1.0))
        throw std::domain_error("complete_elliptic_k: k must lie in [0,1)");
    const double kp = std::sqrt((1.0 - k) * (1.0 + k));
    return pi / (2.0 * agm(1.0, kp));
}

namespace {

template <typename T>
T rf_impl(T x, T y, T z) {
    using std::abs;
    T a = (x + y + z) / 3.0;
    for (int i = 0; i < 128; ++i) {
        const T sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const T lam = sx * sy + sy * sz + sz * sx;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        a = (x + y + z) / 3.0;
        const double scale = abs(a);
        if (abs(x - a) < 1e-8 * scale && abs(y - a) < 1e-8 * scale &&
            abs(z - a) < 1e-8 * scale)
            break;
    }
    const T dx = 1.0 - x / a, dy = 1.0 - y / a, dz = 1.0 - z / a;
    const T e2 = dx * dy + dy * dz + dz * dx;
    const T e3 = dx * dy * dz;
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 -
            3.0 * e2 * e3 / 44.0) /
           std::sqrt(a);
}

} // namespace

double carlson_rf(double x, double y, double z) {
    if (x < 0.0 || y < 0.0 || z < 0.0)
        throw std::domain_error("carlson_rf: real arguments must be >= 0");
    return rf_impl<double>(x, y, z);
}

complex carlson_rf(complex x, complex y, complex z) {
    return rf_impl<complex>(x, y, z);
}

double elliptic_f(double phi, double k) {
    if (!(k >= 0.0 && k < 1.0))
        throw std::domain_error("elliptic_f: k must lie in [0,1)");
    if (!(phi >= -pi / 2 - 1e-12 && phi <= pi / 2 + 1e-12))
        throw std::domain_error("elliptic_f: phi must lie in [-pi/2, pi/2]");
    const double s = std::sin(phi);
    const double c2 = std::max(0.0, 1.0 - s * s);
    const double q = 1.0 - (k * s) * (k * s);
    return s * carlson_rf(c2, q, 1.0);
}

JacobiTriple jacobi_elliptic(double u, double k) {
    if (!(k >= 0.0 && k < 1.0))
        throw std::domain_error("jacobi_elliptic: k must lie in [0,1)");
    if (!std::isfinite(u))
        throw std::domain_error("jacobi_elliptic: non-finite argument");
    // descending Landen scale, then back-recurrence on the amplitude
    constexpr int max_n = 32;
    double a[max_n], c[max_n];
    double an = 1.0, bn = std::sqrt((1.0 - k) * (1.0 + k));
    int n = 0;
    a[0] = an;
    c[0] = k;
    while (std::abs(c[n]) > 1e-16 * an && n < max_n - 1) {
        const double a1 = 0.5 * (an + bn);
        const double c1 = 0.5 * (an - bn);
        bn = std::sqrt(an * bn);
        an = a1;
        ++n;
        a[n] = an;
        c[n] = c1;
    }
    double phi = std::ldexp(an * u, n);
    for (int i = n; i > 0; --i) {
        const double r = std::clamp(c[i] / a[i] * std::sin(phi), -1.0, 1.0);
        phi = 0.5 * (phi + std::asin(r));
    }
    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    const double dn = std::sqrt(1.0 - (k * sn) * (k * sn));
    return {sn, cn, dn};
}

complex jacobi_sn(complex u, double k) {
    if (!(k > 0.0 && k < 1.0))
        throw std::domain_error("jacobi_sn: k must lie in (0,1)");
    if (!std::isfinite(u.real()) || !std::isfinite(u.imag()))
        throw std::domain_error("jacobi_sn: non-finite argument");
    const double kp = std::sqrt((1.0 - k) * (1.0 + k));
    const auto [s, c, d] = jacobi_elliptic(u.real(), k);
    const auto [s1, c1, d1] = jacobi_elliptic(u.imag(), kp);
    const double den = c1 * c1 + (k * s * s1) * (k * s * s1);
    if (den == 0.0) {
        const double inf = std::numeric_limits<double>::infinity();
        return {inf, inf}; // pole of sn
    }
    return complex(s * d1, c * d * s1 * c1) / den;
}

} // namespace qcd
