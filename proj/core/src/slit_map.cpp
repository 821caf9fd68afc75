#include "qcd/slit_map.hpp"

#include <cmath>
#include <stdexcept>

#include "qcd/elliptic.hpp"
#include "qcd/errors.hpp"
#include "qcd/modulus.hpp"

namespace qcd {

namespace {

constexpr complex kI(0.0, 1.0);

// Symmetry bookkeeping for the quadrant reduction. Both generators
// commute with the map: conj and negation.
struct QuadrantReduction {
    complex z;
    bool conj_flag = false;
    bool negconj_flag = false;
};

QuadrantReduction reduce_to_quadrant(complex z) {
    QuadrantReduction r{z};
    if (std::signbit(r.z.imag())) {
        r.z = std::conj(r.z);
        r.conj_flag = true;
    }
    if (std::signbit(r.z.real())) {
        r.z = -std::conj(r.z);
        r.negconj_flag = true;
    }
    return r;
}

complex restore_from_quadrant(complex w, const QuadrantReduction& r) {
    if (r.negconj_flag) w = -std::conj(w);
    if (r.conj_flag) w = std::conj(w);
    return w;
}

} // namespace

SlitAnnulusMap::SlitAnnulusMap(double s) : s_(s), k_(s * s) {
    const auto m = EllipticModulus::from_k(k_);
    kq_ = complete_elliptic_k(m.k);
    kq_prime_ = complete_elliptic_k(m.k_prime);
    log_r_ = pi * kq_prime_ / (4.0 * kq_);
    R_ = std::exp(log_r_);
}

// F(t, k) for real t, as the limit from the upper half-plane. Piecewise
// real formulas along the rectangle edges; no on-cut Carlson calls.
complex SlitAnnulusMap::legendre_f_real(double t) const {
    const double at = std::abs(t);
    if (at <= 1.0) return {elliptic_f(std::asin(t), k_), 0.0};
    const double kp = std::sqrt((1.0 - k_) * (1.0 + k_));
    if (at <= 1.0 / k_) {
        // vertical edges: sn(+-K + iv) = +-1/dn(v, k')
        const double arg = std::sqrt(std::max(0.0, 1.0 - 1.0 / (at * at))) / kp;
        const double v = elliptic_f(std::asin(std::min(1.0, arg)), kp);
        return {t > 0 ? kq_ : -kq_, v};
    }
    // top edge: sn(t0 + iK') = 1/(k sn(t0, k))
    const double t0 = elliptic_f(std::asin(1.0 / (k_ * t)), k_);
    return {t0, kq_prime_};
}

complex SlitAnnulusMap::legendre_f(complex w) const {
    if (w.imag() > 0.0)
        return w * carlson_rf(1.0 - w * w, 1.0 - (k_ * k_) * w * w,
                              complex(1.0, 0.0));
    if (w.imag() < 0.0) return std::conj(legendre_f(std::conj(w)));
    if (!std::isfinite(w.real())) return {0.0, kq_prime_}; // mid top edge
    return legendre_f_real(w.real());
}

complex SlitAnnulusMap::map_quadrant(complex z) const {
    if (z == complex(0.0, 0.0)) return {1.0, 0.0}; // slit-centre prime end
    const complex zeta = z * z;
    const complex w = -0.5 * (zeta + 1.0 / zeta);
    complex u;
    const complex den = 1.0 - k_ * w;
    if (std::abs(den) == 0.0) {
        u = complex(0.0, kq_prime_);
    } else {
        u = legendre_f((w - k_) / den);
    }
    return std::exp(log_r_ + kI * pi * (u + kq_) / (4.0 * kq_));
}

complex SlitAnnulusMap::map(complex z) const {
    if (!(std::abs(z) <= 1.0 + 1e-12))
        throw std::domain_error("SlitAnnulusMap::map: point outside the disc");
    const auto red = reduce_to_quadrant(z);
    return restore_from_quadrant(map_quadrant(red.z), red);
}

complex SlitAnnulusMap::inverse_quadrant(complex w) const {
    const complex logw = std::log(w);
    const complex u =
        -kq_ - kI * (4.0 * kq_ / pi) * (logw - log_r_);
    const complex wt = jacobi_sn(u, k_);
    complex wp;
    if (!std::isfinite(wt.real()) || !std::isfinite(wt.imag()) ||
        std::abs(wt) > 1e12) {
        wp = complex(1.0 / k_, 0.0);
    } else {
        const complex den = k_ * (1.0 + k_ * wt);
        if (std::abs(den) == 0.0) return {0.0, 0.0}; // slit-centre corner
        wp = 1.0 / k_ + (k_ * k_ - 1.0) / den;
    }
    // solve -(zeta + 1/zeta)/2 = wp for the root in the closed upper half disc
    const complex rt = std::sqrt(wp * wp - 1.0);
    const complex c1 = -wp + rt, c2 = -wp - rt;
    const complex big = std::norm(c1) > std::norm(c2) ? c1 : c2;
    complex zeta = 1.0 / big;
    if (std::abs(zeta) > 1.0 + 1e-12) zeta = big;
    // noise just below the real axis would flip the sqrt branch
    if (std::abs(zeta.imag()) <= 4e-13 * std::abs(zeta))
        zeta = complex(zeta.real(), 0.0);
    if (zeta.imag() < 0.0) zeta = std::conj(zeta);
    return std::sqrt(zeta);
}

complex SlitAnnulusMap::inverse(complex w) const {
    const double aw = std::abs(w);
    if (!(aw >= 1.0 - 1e-9 && aw <= R_ * (1.0 + 1e-9)))
        throw std::domain_error(
            "SlitAnnulusMap::inverse: point outside the annulus");
    const auto red = reduce_to_quadrant(w);
    return restore_from_quadrant(inverse_quadrant(red.z), red);
}

complex SlitAnnulusMap::derivative_quadrant(complex z) const {
    // chain rule through z -> zeta -> w -> wt -> u -> log phi
    const complex zeta = z * z;
    const complex w = -0.5 * (zeta + 1.0 / zeta);
    const complex wt = (w - k_) / (1.0 - k_ * w);
    // dF/dwt = 1/sqrt((1-wt^2)(1-k^2 wt^2)), branch continuous on the
    // closed upper half-plane, positive on (-1,1)
    complex g;
    if (wt.imag() == 0.0) {
        const double t = wt.real();
        // limits from the upper half-plane: factors (1 - c t) approach
        // their cut from below, factors (1 + c t) from above
        auto fac_below = [](double v) {
            return v >= 0.0 ? complex(std::sqrt(v), 0.0) : -kI * std::sqrt(-v);
        };
        auto fac_above = [](double v) {
            return v >= 0.0 ? complex(std::sqrt(v), 0.0) : kI * std::sqrt(-v);
        };
        g = fac_below(1.0 - t) * fac_above(1.0 + t) *
            fac_below(1.0 - k_ * t) * fac_above(1.0 + k_ * t);
    } else {
        g = std::sqrt(1.0 - wt) * std::sqrt(1.0 + wt) *
            std::sqrt(1.0 - k_ * wt) * std::sqrt(1.0 + k_ * wt);
    }
    const complex du_dwt = 1.0 / g;
    const complex dwt_dw = (1.0 - k_ * k_) / ((1.0 - k_ * w) * (1.0 - k_ * w));
    const complex dw_dzeta = -0.5 * (1.0 - 1.0 / (zeta * zeta));
    const complex phi = map_quadrant(z);
    return phi * (kI * pi / (4.0 * kq_)) * du_dwt * dwt_dw * dw_dzeta * 2.0 * z;
}

complex SlitAnnulusMap::derivative(complex z) const {
    if (!(std::abs(z) <= 1.0 + 1e-12))
        throw std::domain_error(
            "SlitAnnulusMap::derivative: point outside the disc");
    const auto red = reduce_to_quadrant(z);
    const complex d = derivative_quadrant(red.z);
    // an odd number of conjugations in the reduction conjugates phi'
    return (red.conj_flag != red.negconj_flag) ? std::conj(d) : d;
}

SlitAnnulusMap build_slit_annulus_map(double s, double tol) {
    if (!(s > 0.0 && s < 1.0))
        throw std::domain_error(
            "build_slit_annulus_map: s must lie in (0,1)");
    if (!(tol > 0.0))
        throw std::domain_error("build_slit_annulus_map: tol must be positive");
    SlitAnnulusMap m(s);

    // modulus identity R = sqrt(Phi(1/s^2)) and round-trip probes
    double residual =
        std::abs(m.outer_radius() - std::sqrt(grotzsch_phi(1.0 / (s * s))));
    const complex probes[] = {{0.5 * (1.0 + s), 0.3 * (1.0 - s)},
                              {-0.4, 0.7 * s + 0.2 * (1.0 - s)},
                              {0.2, -0.6}};
    for (complex z : probes) {
        if (std::abs(z) >= 1.0) continue;
        residual = std::max(residual, std::abs(m.inverse(m.map(z)) - z));
    }
    if (!(residual <= tol))
        throw convergence_error("build_slit_annulus_map: self-check failed",
                                residual);
    return m;
}

} // namespace qcd
