#include "qcd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace qcd {

namespace {

constexpr std::uint64_t sweep_seed = 0x5eed01;

struct Wirtinger {
    complex fz;
    complex fzb;
};

Wirtinger wirtinger_fd(const DiscMapFn& f, complex z, double h) {
    const complex fe = (f(z + h) - f(z - h)) / (2.0 * h);
    const complex fn =
        (f(z + complex(0.0, h)) - f(z - complex(0.0, h))) / (2.0 * h);
    return {0.5 * (fe - complex(0.0, 1.0) * fn),
            0.5 * (fe + complex(0.0, 1.0) * fn)};
}

} // namespace

double measured_dilatation(const DiscMapFn& map, complex z, double h) {
    if (!(h > 0.0))
        throw std::domain_error("measured_dilatation: h must be positive");
    const auto [fz, fzb] = wirtinger_fd(map, z, h);
    const double jac = std::norm(fz) - std::norm(fzb);
    if (!(jac > 0.0))
        throw std::runtime_error(
            "measured_dilatation: nonpositive Jacobian estimate");
    return (std::abs(fz) + std::abs(fzb)) / (std::abs(fz) - std::abs(fzb));
}

double TriangulatedDiscMap::triangle_dilatation(int t) const {
    const auto& tri = triangles[t];
    const complex dp1 = vertices[tri[1]] - vertices[tri[0]];
    const complex dp2 = vertices[tri[2]] - vertices[tri[0]];
    const complex dq1 = images[tri[1]] - images[tri[0]];
    const complex dq2 = images[tri[2]] - images[tri[0]];
    const complex det = dp1 * std::conj(dp2) - dp2 * std::conj(dp1);
    const complex a = (dq1 * std::conj(dp2) - dq2 * std::conj(dp1)) / det;
    const complex b = (dp1 * dq2 - dp2 * dq1) / det;
    const double na = std::abs(a), nb = std::abs(b);
    if (!(nb < na)) return std::numeric_limits<double>::infinity();
    return (na + nb) / (na - nb);
}

double TriangulatedDiscMap::max_dilatation() const {
    double m = 1.0;
    for (int t = 0; t < static_cast<int>(triangles.size()); ++t)
        m = std::max(m, triangle_dilatation(t));
    return m;
}

TriangulatedDiscMap make_disc_mesh(int rings, double x) {
    if (rings < 2)
        throw std::domain_error("make_disc_mesh: need at least 2 rings");
    TriangulatedDiscMap mesh;
    mesh.vertices.push_back(0.0);
    std::vector<int> ring_start{0};
    for (int r = 1; r <= rings; ++r) {
        ring_start.push_back(static_cast<int>(mesh.vertices.size()));
        const int count = 8 * r;
        for (int j = 0; j < count; ++j) {
            const double th = 2.0 * pi * j / count;
            mesh.vertices.push_back(std::polar(static_cast<double>(r) / rings, th));
        }
    }
    mesh.boundary_start = ring_start.back();

    // fan around the centre
    for (int j = 0; j < 8; ++j)
        mesh.triangles.push_back({0, 1 + j, 1 + (j + 1) % 8});
    // strips between consecutive rings, advancing by angle
    for (int r = 1; r < rings; ++r) {
        const int in0 = ring_start[r], in_n = 8 * r;
        const int out0 = ring_start[r + 1], out_n = 8 * (r + 1);
        int i = 0, o = 0;
        while (i < in_n || o < out_n) {
            const double ang_i =
                i < in_n ? 2.0 * pi * (i + 1) / in_n : std::numeric_limits<double>::max();
            const double ang_o =
                o < out_n ? 2.0 * pi * (o + 1) / out_n : std::numeric_limits<double>::max();
            const int vi = in0 + (i % in_n), vo = out0 + (o % out_n);
            if (ang_o <= ang_i) {
                mesh.triangles.push_back({vo, out0 + (o + 1) % out_n, vi});
                ++o;
            } else {
                mesh.triangles.push_back({vi, vo, in0 + (i + 1) % in_n});
                ++i;
            }
        }
    }

    // initial images: discrete harmonic extension of the constraints
    // (boundary fixed, centre at -x); Tutte-style averaging keeps the
    // triangulation embedded
    mesh.images = mesh.vertices;
    mesh.images[0] = -x;
    std::vector<std::vector<int>> nbr(mesh.vertices.size());
    for (const auto& tri : mesh.triangles)
        for (int e = 0; e < 3; ++e) {
            nbr[tri[e]].push_back(tri[(e + 1) % 3]);
            nbr[tri[e]].push_back(tri[(e + 2) % 3]);
        }
    for (int it = 0; it < 2000; ++it) {
        double delta = 0.0;
        for (int v = 1; v < mesh.boundary_start; ++v) {
            complex sum = 0.0;
            for (int w : nbr[v]) sum += mesh.images[w];
            const complex next = sum / static_cast<double>(nbr[v].size());
            delta = std::max(delta, std::abs(next - mesh.images[v]));
            mesh.images[v] = next;
        }
        if (delta < 1e-12) break;
    }
    return mesh;
}

namespace {

// adjacency: triangles touching each vertex
std::vector<std::vector<int>> vertex_triangles(const TriangulatedDiscMap& m) {
    std::vector<std::vector<int>> adj(m.vertices.size());
    for (int t = 0; t < static_cast<int>(m.triangles.size()); ++t)
        for (int v : m.triangles[t]) adj[v].push_back(t);
    return adj;
}

// softmax of the adjacent-triangle dilatations relative to ref (constant
// while one vertex is being moved, so comparisons stay overflow-free)
double local_soft_objective(const TriangulatedDiscMap& m,
                            const std::vector<int>& tris, double temp,
                            double ref) {
    double s = 0.0;
    for (int t : tris) {
        const double d = m.triangle_dilatation(t);
        if (!std::isfinite(d)) return std::numeric_limits<double>::infinity();
        s += std::exp((d - ref) / temp);
    }
    return s;
}

double local_max(const TriangulatedDiscMap& m, const std::vector<int>& tris) {
    double mx = 1.0;
    for (int t : tris) mx = std::max(mx, m.triangle_dilatation(t));
    return mx;
}

} // namespace

double discrete_min_dilatation(double x, int mesh_refinement) {
    if (!(x >= 0.0 && x < 1.0))
        throw std::domain_error("discrete_min_dilatation: x must lie in [0,1)");
    if (mesh_refinement < 2)
        throw std::domain_error("discrete_min_dilatation: refinement too small");
    if (x == 0.0) return 1.0;

    TriangulatedDiscMap mesh = make_disc_mesh(mesh_refinement, x);
    if (!std::isfinite(mesh.max_dilatation()))
        throw std::runtime_error(
            "discrete_min_dilatation: initial mesh is not embedded");
    const auto adj = vertex_triangles(mesh);
    const double s2 = M_SQRT1_2;
    const std::array<complex, 8> dirs = {
        complex{1, 0},   complex{-1, 0}, complex{0, 1},   complex{0, -1},
        complex{s2, s2}, complex{-s2, s2}, complex{s2, -s2}, complex{-s2, -s2}};

    for (double temp : {0.3, 0.1, 0.03, 0.01, 0.004}) {
        double step = 0.25 / mesh_refinement;
        for (int sweep = 0; sweep < 60; ++sweep) {
            bool moved = false;
            // vertex 0 (pinned) and boundary vertices stay put
            for (int v = 1; v < mesh.boundary_start; ++v) {
                const double ref = local_max(mesh, adj[v]);
                double best = local_soft_objective(mesh, adj[v], temp, ref);
                const complex original = mesh.images[v];
                complex best_pos = original;
                for (const complex& d : dirs) {
                    mesh.images[v] = original + step * d;
                    const double val =
                        local_soft_objective(mesh, adj[v], temp, ref);
                    if (val < best) {
                        best = val;
                        best_pos = mesh.images[v];
                    }
                }
                mesh.images[v] = best_pos;
                if (best_pos != original) moved = true;
            }
            if (!moved) {
                step *= 0.5;
                if (step < 1e-7) break;
            }
        }
    }
    return mesh.max_dilatation();
}

DiscMapFn competitor_map(double x, CompetitorFamily family, double support) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("competitor_map: x must lie in (0,1)");
    if (!(support > 0.0 && support < 1.0))
        throw std::domain_error("competitor_map: support must lie in (0,1)");
    if (family == CompetitorFamily::radial_bump) {
        return [x, support](complex z) {
            const double t = std::abs(z) / support;
            if (t >= 1.0) return z;
            const double g = (1.0 - t * t) * (1.0 - t * t);
            return z - x * g;
        };
    }
    return [x, support](complex z) {
        const double t = std::abs(z) / support;
        if (t >= 1.0) return z;
        const double g = (1.0 - t * t) * (1.0 - t * t);
        const complex mob = (z - x) / (1.0 - x * z);
        return z + (mob - z) * g;
    };
}

std::vector<double> default_competitor_supports(CompetitorFamily family) {
    if (family == CompetitorFamily::radial_bump) return {0.95, 0.9, 0.8, 0.7};
    return {0.95, 0.9, 0.85, 0.8};
}

std::vector<double> competitor_dilatation_sweep(
    double x, CompetitorFamily family, const std::vector<double>& supports) {
    std::vector<double> out;
    out.reserve(supports.size());
    std::mt19937_64 rng(sweep_seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (double support : supports) {
        const auto f = competitor_map(x, family, support);
        double worst = 1.0;
        // structured ring samples plus seeded random fill
        for (int ring = 1; ring <= 12; ++ring) {
            const double r = 0.985 * ring / 13.0;
            for (int j = 0; j < 48; ++j) {
                const complex z = std::polar(r, 2.0 * pi * (j + 0.5) / 48.0);
                worst = std::max(worst, measured_dilatation(f, z, 1e-6));
            }
        }
        for (int i = 0; i < 300; ++i) {
            const double r = 0.02 + 0.96 * std::sqrt(unif(rng));
            const complex z = std::polar(r, 2.0 * pi * unif(rng));
            worst = std::max(worst, measured_dilatation(f, z, 1e-6));
        }
        out.push_back(worst);
    }
    return out;
}

} // namespace qcd
