#include <doctest.h>

#include <cmath>
#include <random>

#include "qcd/shift.hpp"
#include "qcd/verify.hpp"

using namespace qcd;

TEST_SUITE("verify") {

TEST_CASE("measured dilatation of reference maps") {
    // affine stretch: dilatation 2 everywhere
    const DiscMapFn affine = [](complex z) {
        return 1.5 * z + 0.5 * std::conj(z);
    };
    for (const complex z : {complex(0.0, 0.0), complex(0.4, -0.3),
                            complex(-0.2, 0.6)})
        CHECK(measured_dilatation(affine, z) ==
              doctest::Approx(2.0).epsilon(1e-10));

    // conformal square: dilatation 1
    const DiscMapFn square = [](complex z) { return z * z; };
    CHECK(measured_dilatation(square, complex(0.3, 0.2)) ==
          doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("measured dilatation of the extremal map is constant") {
    const auto f = build_shift(0.25);
    const DiscMapFn fn = [&](complex z) { return evaluate_shift(f, z); };
    const double K = f.dilatation();
    std::mt19937_64 rng(83);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int used = 0;
    for (int i = 0; used < 200 && i < 2000; ++i) {
        const complex z =
            std::polar(0.05 + 0.88 * unif(rng), 2.0 * pi * unif(rng));
        const double dx = std::clamp(z.real(), -0.25, 0.0) - z.real();
        if (std::hypot(dx, z.imag()) < 5e-3) continue;
        CHECK(measured_dilatation(fn, z) == doctest::Approx(K).epsilon(1e-3));
        ++used;
    }
    CHECK(used == 200);
}

TEST_CASE("measured dilatation rejects orientation-reversing data") {
    const DiscMapFn mirror = [](complex z) { return std::conj(z); };
    CHECK_THROWS_AS(measured_dilatation(mirror, complex(0.1, 0.1)),
                    std::runtime_error);
    CHECK_THROWS_AS(
        measured_dilatation([](complex z) { return z; }, complex(0.0, 0.0), -1.0),
        std::domain_error);
}

TEST_CASE("disc mesh is embedded with fixed boundary") {
    const auto mesh = make_disc_mesh(8, 0.25);
    CHECK(std::isfinite(mesh.max_dilatation()));
    CHECK(mesh.images[0] == complex(-0.25, 0.0));
    for (size_t v = mesh.boundary_start; v < mesh.vertices.size(); ++v) {
        CHECK(mesh.images[v] == mesh.vertices[v]);
        CHECK(std::abs(std::abs(mesh.vertices[v]) - 1.0) < 1e-12);
    }
    CHECK_THROWS_AS(make_disc_mesh(1, 0.25), std::domain_error);
}

TEST_CASE("discrete minimum dilatation") {
    CHECK(discrete_min_dilatation(0.0, 8) == 1.0);

    const double K = shift_dilatation(0.25);
    const double v = discrete_min_dilatation(0.25, 8);
    CHECK(v >= 0.9 * K);
    CHECK(v <= 1.1 * K);

    // nondecreasing in the displacement
    const double v1 = discrete_min_dilatation(0.1, 8);
    const double v2 = discrete_min_dilatation(0.25, 8);
    const double v3 = discrete_min_dilatation(0.4, 8);
    CHECK(v1 >= 1.0);
    CHECK(v2 >= v1 - 1e-9);
    CHECK(v3 >= v2 - 1e-9);

    CHECK_THROWS_AS(discrete_min_dilatation(-0.1, 8), std::domain_error);
    CHECK_THROWS_AS(discrete_min_dilatation(0.25, 1), std::domain_error);
}

TEST_CASE("radial bump competitors exceed the extremal dilatation") {
    const double x = 0.25;
    const double K = shift_dilatation(x);
    const auto worst = competitor_dilatation_sweep(
        x, CompetitorFamily::radial_bump,
        default_competitor_supports(CompetitorFamily::radial_bump));
    for (double w : worst) CHECK(w >= K - 1e-3);
    // the rho = 0.9 entry from the family is well above K
    CHECK(worst[1] > K);
}

TEST_CASE("moebius patch competitors blow up as the support shrinks") {
    const double x = 0.25;
    const double K = shift_dilatation(x);
    const auto worst = competitor_dilatation_sweep(
        x, CompetitorFamily::mobius_patch,
        default_competitor_supports(CompetitorFamily::mobius_patch));
    for (double w : worst) CHECK(w >= K - 1e-3);
    for (size_t i = 1; i < worst.size(); ++i) CHECK(worst[i] > worst[i - 1]);
}

TEST_CASE("self comparison: the extremal map measures its own dilatation") {
    const auto f = build_shift(0.25);
    const DiscMapFn fn = [&](complex z) { return evaluate_shift(f, z); };
    double worst = 1.0;
    for (int ring = 1; ring <= 8; ++ring) {
        const double r = 0.9 * ring / 9.0;
        for (int j = 0; j < 24; ++j) {
            const complex z = std::polar(r, 2.0 * pi * (j + 0.5) / 24.0);
            const double dx = std::clamp(z.real(), -0.25, 0.0) - z.real();
            if (std::hypot(dx, z.imag()) < 5e-3) continue;
            worst = std::max(worst, measured_dilatation(fn, z, 1e-6));
        }
    }
    CHECK(worst == doctest::Approx(f.dilatation()).epsilon(1e-3));
}

} // TEST_SUITE
