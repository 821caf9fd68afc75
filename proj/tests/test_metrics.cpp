#include <doctest.h>

#include <cmath>
#include <random>

#include "qcd/errors.hpp"
#include "qcd/metrics.hpp"
#include "qcd/modulus.hpp"
#include "qcd/shift.hpp"

using namespace qcd;

namespace {
complex random_disc_point(std::mt19937_64& rng, double rmax) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    return std::polar(rmax * std::sqrt(unif(rng)), 2.0 * pi * unif(rng));
}

complex random_automorphism(std::mt19937_64& rng, complex z, complex a,
                            double th) {
    return std::polar(1.0, th) * (z - a) / (1.0 - std::conj(a) * z);
}
} // namespace

TEST_SUITE("metrics") {

TEST_CASE("hyperbolic distance basics") {
    CHECK(hyperbolic_distance(complex(0.3, 0.1), complex(0.3, 0.1)) == 0.0);
    // frozen: log(5/3), the direct integral of 2/(1-s^2) from 0 to 1/4
    CHECK(hyperbolic_distance(0.0, 0.25) ==
          doctest::Approx(0.51082562376599068).epsilon(1e-15));
    CHECK_THROWS_AS(hyperbolic_distance(complex(1.0, 0.0), complex(0.0, 0.0)),
                    std::domain_error);
    CHECK_THROWS_AS(hyperbolic_distance(complex(0.0, 0.0), complex(0.0, 1.2)),
                    std::domain_error);
}

TEST_CASE("hyperbolic distance is Moebius invariant") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const complex z1 = random_disc_point(rng, 0.95);
        const complex z2 = random_disc_point(rng, 0.95);
        const complex a = random_disc_point(rng, 0.9);
        const double th = 2.0 * pi * unif(rng);
        const double d0 = hyperbolic_distance(z1, z2);
        const double d1 = hyperbolic_distance(random_automorphism(rng, z1, a, th),
                                              random_automorphism(rng, z2, a, th));
        CHECK(std::abs(d0 - d1) < 1e-12);
    }
}

TEST_CASE("kra distance basics") {
    CHECK(kra_distance(complex(0.2, -0.4), complex(0.2, -0.4)) == 0.0);
    // frozen: (1/2) log K(0.25) with K from the quadrature-oracle route
    CHECK(kra_distance(0.0, -0.25) ==
          doctest::Approx(0.12719198372839335).epsilon(1e-13));
}

TEST_CASE("kra distance symmetry and Moebius invariance") {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 40; ++i) {
        const complex z1 = random_disc_point(rng, 0.9);
        const complex z2 = random_disc_point(rng, 0.9);
        if (z1 == z2) continue;
        CHECK(kra_distance(z1, z2) == kra_distance(z2, z1)); // exact
        const complex a = random_disc_point(rng, 0.85);
        const double th = 2.0 * pi * unif(rng);
        CHECK(std::abs(kra_distance(random_automorphism(rng, z1, a, th),
                                    random_automorphism(rng, z2, a, th)) -
                       kra_distance(z1, z2)) < 1e-12);
    }
}

TEST_CASE("kra distance satisfies the triangle inequality on samples") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 1000; ++i) {
        const complex a = random_disc_point(rng, 0.97);
        const complex b = random_disc_point(rng, 0.97);
        const complex c = random_disc_point(rng, 0.97);
        CHECK(kra_distance(a, c) <=
              kra_distance(a, b) + kra_distance(b, c) + 1e-12);
    }
}

TEST_CASE("kra to hyperbolic comparison") {
    std::mt19937_64 rng(73);
    for (int i = 0; i < 1000; ++i) {
        const complex z1 = random_disc_point(rng, 0.995);
        const complex z2 = random_disc_point(rng, 0.995);
        if (pseudo_hyperbolic(z1, z2) == 0.0) continue;
        const double ratio =
            kra_distance(z1, z2) / hyperbolic_distance(z1, z2);
        CHECK(ratio > 0.0);
        CHECK(ratio < 1.0);
    }
    // the ratio tends to 1/4 for nearby points
    for (double x : {1e-3, 1e-4}) {
        const double ratio = kra_distance(0.0, x) / hyperbolic_distance(0.0, x);
        CHECK(std::abs(ratio - 0.25) < 1e-3);
    }
}

TEST_CASE("eq-9 identity between K, phi and the hyperbolic distance") {
    for (double x : {0.1, 0.25, 0.5}) {
        const double lhs = std::log(shift_dilatation(x));
        const double rhs =
            2.0 * hyperbolic_distance(0.0, 1.0 / grotzsch_phi(1.0 / x));
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("shift between two points sends z1 to z2 and fixes the circle") {
    const complex z1(0.2, 0.1), z2(-0.3, 0.4);
    CHECK(std::abs(shift_between(z1, z2, z1) - z2) < 1e-8);
    for (int j = 0; j < 36; ++j) {
        const complex b = std::polar(1.0, 2.0 * pi * j / 36.0);
        CHECK(std::abs(shift_between(z1, z2, b) - b) < 1e-6);
    }
    CHECK_THROWS_AS(shift_between(z1, z1, complex(0.0, 0.0)),
                    std::domain_error);
    CHECK_THROWS_AS(shift_between(complex(1.0, 0.0), z2, complex(0.0, 0.0)),
                    std::domain_error);
}

TEST_CASE("shift between reduces to the normalized shift") {
    const auto f = build_shift(0.25);
    std::mt19937_64 rng(79);
    for (int i = 0; i < 50; ++i) {
        const complex z = random_disc_point(rng, 0.98);
        CHECK(std::abs(shift_between(0.0, -0.25, z) - evaluate_shift(f, z)) <
              1e-9);
    }
}

TEST_CASE("gehring displacement vanishes as K approaches 1") {
    double prev = 1e9;
    for (int n = 1; n <= 8; ++n) {
        const double h = gehring_h(1.0 + std::pow(10.0, -n));
        CHECK(h > 0.0);
        CHECK(h < prev);
        prev = h;
    }
    CHECK(prev < 1e-6);
    CHECK_THROWS_AS(gehring_h(1.0), std::domain_error);
    CHECK_THROWS_AS(gehring_h(0.7), std::domain_error);
}

TEST_CASE("gehring round trip through the dilatation") {
    // frozen: d_hyp(0, 0.25) = log(5/3)
    CHECK(gehring_h(shift_dilatation(0.25)) ==
          doctest::Approx(0.51082562376599068).epsilon(1e-8));
    for (double x : {0.05, 0.1, 0.25, 0.5, 0.7, 0.9}) {
        CHECK(std::abs(gehring_h(shift_dilatation(x)) -
                       hyperbolic_distance(0.0, x)) < 1e-8);
    }
}

TEST_CASE("gehring displacement is monotone in K") {
    double prev = 0.0;
    for (double K : {1.1, 1.5, 2.0, 4.0}) {
        const double h = gehring_h(K);
        CHECK(h > prev);
        prev = h;
    }
}

} // TEST_SUITE
