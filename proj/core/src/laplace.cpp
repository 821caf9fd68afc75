#include "qcd/laplace.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "qcd/errors.hpp"
#include "qcd/types.hpp"

namespace qcd {

namespace {

// Potential problem on a chart-rectangular grid: radial-like axis i with
// Dirichlet ends, periodic angular axis j.
struct ChartGrid {
    int ni;       // radial nodes, 0..ni-1
    int nj;       // angular nodes, periodic
    double d1;    // radial spacing
    double d2;    // angular spacing
    std::vector<double> u;
    std::vector<std::uint8_t> fixed;

    double& at(int i, int j) { return u[static_cast<size_t>(i) * nj + j]; }
    double at(int i, int j) const { return u[static_cast<size_t>(i) * nj + j]; }
    std::uint8_t& fx(int i, int j) {
        return fixed[static_cast<size_t>(i) * nj + j];
    }
};

// Red-black SOR for  u_rr + (cr/r) u_r + (ca/r^2) u_tt = 0  with cr, ca
// either both 1 (polar chart) or cr = 0, ca handled via r = 1 (conformal
// log chart).
void solve_sor(ChartGrid& g, bool polar, double r0) {
    const int ni = g.ni, nj = g.nj;
    const double inv_d1sq = 1.0 / (g.d1 * g.d1);
    const double inv_d2sq = 1.0 / (g.d2 * g.d2);
    const double omega = 2.0 / (1.0 + std::sin(pi / std::max(ni, nj)));

    double delta = 1.0;
    const int max_sweeps = 200000;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        delta = 0.0;
        for (int parity = 0; parity < 2; ++parity) {
            for (int i = 1; i < ni - 1; ++i) {
                const double r = polar ? r0 + i * g.d1 : 1.0;
                const double ce = inv_d1sq + (polar ? 1.0 / (2.0 * r * g.d1) : 0.0);
                const double cw = inv_d1sq - (polar ? 1.0 / (2.0 * r * g.d1) : 0.0);
                const double cn = inv_d2sq / (r * r);
                const double cc = ce + cw + 2.0 * cn;
                const int jstart = (i + parity) & 1;
                for (int j = jstart; j < nj; j += 2) {
                    if (g.fx(i, j)) continue;
                    const int jp = j + 1 == nj ? 0 : j + 1;
                    const int jm = j == 0 ? nj - 1 : j - 1;
                    const double val =
                        (ce * g.at(i + 1, j) + cw * g.at(i - 1, j) +
                         cn * (g.at(i, jp) + g.at(i, jm))) /
                        cc;
                    const double d = omega * (val - g.at(i, j));
                    g.at(i, j) += d;
                    delta = std::max(delta, std::abs(d));
                }
            }
        }
        if (delta < 1e-12) return;
    }
    throw convergence_error("laplace_ring_module: SOR did not converge", delta);
}

// flux through radius index i0 (chart radius r), positive outward
double flux_at(const ChartGrid& g, bool polar, double r0, int i0) {
    double flux = 0.0;
    const double r = polar ? r0 + i0 * g.d1 : 1.0;
    for (int j = 0; j < g.nj; ++j) {
        const double du = (g.at(i0 + 1, j) - g.at(i0 - 1, j)) / (2.0 * g.d1);
        flux += du * r * g.d2;
    }
    return flux;
}

ChartGrid setup_annulus(const AnnulusDomain& d, int n) {
    if (!(d.r_in > 0.0 && d.r_out > d.r_in))
        throw std::domain_error("laplace_ring_module: requires 0 < r_in < r_out");
    ChartGrid g;
    g.ni = n + 1;
    g.nj = ((2 * n + 3) / 4) * 4;
    g.d1 = std::log(d.r_out / d.r_in) / n;
    g.d2 = 2.0 * pi / g.nj;
    g.u.assign(static_cast<size_t>(g.ni) * g.nj, 0.0);
    g.fixed.assign(g.u.size(), 0);
    for (int j = 0; j < g.nj; ++j) {
        g.fx(0, j) = 1;
        g.fx(g.ni - 1, j) = 1;
        g.at(g.ni - 1, j) = 1.0;
    }
    return g;
}

ChartGrid setup_polar_slit(double slit_r, bool vertical, int n) {
    ChartGrid g;
    g.ni = n + 1;
    g.nj = ((2 * n + 3) / 4) * 4;
    g.d1 = 1.0 / n;
    g.d2 = 2.0 * pi / g.nj;
    g.u.assign(static_cast<size_t>(g.ni) * g.nj, 0.0);
    g.fixed.assign(g.u.size(), 0);
    for (int j = 0; j < g.nj; ++j) {
        g.fx(g.ni - 1, j) = 1;
        g.at(g.ni - 1, j) = 1.0;
        g.fx(0, j) = 1; // origin lies on the slit
    }
    // slit rays on exact grid lines; the tip snaps to the nearest node
    const int itip = static_cast<int>(std::lround(slit_r * n));
    if (vertical) {
        const int jq = g.nj / 4;
        for (int i = 0; i <= itip; ++i) {
            g.fx(i, jq) = 1;
            g.fx(i, 3 * jq) = 1;
        }
    } else {
        for (int i = 0; i <= itip; ++i) g.fx(i, 0) = 1;
    }
    return g;
}

double module_from_grid(ChartGrid& g, bool polar, double r0, double inner_gap) {
    solve_sor(g, polar, r0);
    // average the flux over a band of radii clear of both boundaries
    const double lo_f = inner_gap + 0.12 * (1.0 - inner_gap);
    const double hi_f = 1.0 - 0.12 * (1.0 - inner_gap);
    int lo = std::max(1, static_cast<int>((g.ni - 1) * lo_f));
    int hi = std::min(g.ni - 2, static_cast<int>((g.ni - 1) * hi_f));
    if (hi < lo) hi = lo;
    double total = 0.0;
    int count = 0;
    for (int i0 = lo; i0 <= hi; i0 += std::max(1, (hi - lo) / 4)) {
        total += flux_at(g, polar, r0, i0);
        ++count;
    }
    const double flux = total / count;
    if (!(flux > 0.0))
        throw convergence_error("laplace_ring_module: degenerate flux", flux);
    return 1.0 / flux;
}

} // namespace

double laplace_ring_module(const RingDomain& domain, int n) {
    if (n < 32)
        throw std::domain_error("laplace_ring_module: grid size must be >= 32");
    return std::visit(
        [n](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, AnnulusDomain>) {
                ChartGrid g = setup_annulus(d, n);
                return module_from_grid(g, false, 0.0, 0.0);
            } else if constexpr (std::is_same_v<T, GrotzschRingDomain>) {
                if (!(d.r > 0.0 && d.r < 1.0))
                    throw std::domain_error(
                        "laplace_ring_module: slit length must lie in (0,1)");
                ChartGrid g = setup_polar_slit(d.r, false, n);
                return module_from_grid(g, true, 0.0, d.r);
            } else {
                if (!(d.s > 0.0 && d.s < 1.0))
                    throw std::domain_error(
                        "laplace_ring_module: slit length must lie in (0,1)");
                ChartGrid g = setup_polar_slit(d.s, true, n);
                return module_from_grid(g, true, 0.0, d.s);
            }
        },
        domain);
}

GridField laplace_ring_potential(const RingDomain& domain, int n) {
    if (n < 32)
        throw std::domain_error("laplace_ring_potential: grid size must be >= 32");
    return std::visit(
        [n](const auto& d) -> GridField {
            using T = std::decay_t<decltype(d)>;
            ChartGrid g = [&] {
                if constexpr (std::is_same_v<T, AnnulusDomain>)
                    return setup_annulus(d, n);
                else if constexpr (std::is_same_v<T, GrotzschRingDomain>)
                    return setup_polar_slit(d.r, false, n);
                else
                    return setup_polar_slit(d.s, true, n);
            }();
            const bool polar = !std::is_same_v<T, AnnulusDomain>;
            solve_sor(g, polar, 0.0);
            GridField f;
            f.nx = g.ni;
            f.ny = g.nj;
            f.x0 = 0.0;
            f.y0 = 0.0;
            f.dx = g.d1;
            f.dy = g.d2;
            f.values.resize(g.u.size());
            // GridField is column-fast in i; transpose from the chart layout
            for (int i = 0; i < g.ni; ++i)
                for (int j = 0; j < g.nj; ++j)
                    f.values[static_cast<size_t>(j) * g.ni + i] = g.at(i, j);
            return f;
        },
        domain);
}

} // namespace qcd
