#include <doctest.h>

#include <cmath>
#include <random>

#include "horopack/volumes.hpp"
#include "horopack/errors.hpp"
#include "oracle_helpers.hpp"

using namespace horo;

namespace {
constexpr double kPi = 3.14159265358979323846;
std::mt19937_64 rng(77001);
double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}
} // namespace

TEST_CASE("lobachevsky special values") {
    CHECK(lobachevsky(0.0) == 0.0);
    CHECK(std::abs(lobachevsky(kPi)) < 1e-14);
    CHECK(std::abs(lobachevsky(kPi / 2.0)) < 1e-14);
    CHECK(lobachevsky(kPi / 6.0) == doctest::Approx(0.5074708032048268).epsilon(1e-12));
    // Catalan's constant: 2 L(pi/4).
    CHECK(2.0 * lobachevsky(kPi / 4.0) ==
          doctest::Approx(0.9159655941772190).epsilon(1e-13));
}

TEST_CASE("lobachevsky agrees with quadrature of the defining integral") {
    CHECK(lobachevsky(kPi / 6.0) ==
          doctest::Approx(testoracle::lobachevsky_quadrature(kPi / 6.0)).epsilon(1e-11));
    CHECK(std::abs(lobachevsky(kPi / 2.0) - testoracle::lobachevsky_quadrature(kPi / 2.0)) <
          1e-11);
    for (int k = 0; k < 25; ++k) {
        const double x = uniform(0.05, 2.6);
        CHECK(lobachevsky(x) ==
              doctest::Approx(testoracle::lobachevsky_quadrature(x)).epsilon(2e-11));
    }
}

TEST_CASE("lobachevsky is odd and pi-periodic") {
    for (int k = 0; k < 200; ++k) {
        const double x = uniform(-9.0, 9.0);
        CHECK(std::abs(lobachevsky(x) + lobachevsky(-x)) < 1e-12);
        CHECK(std::abs(lobachevsky(x + kPi) - lobachevsky(x)) < 1e-12);
    }
}

TEST_CASE("lobachevsky maximum on [0, pi] sits at pi/6") {
    const double peak = lobachevsky(kPi / 6.0);
    for (int k = 0; k <= 10000; ++k) {
        const double x = kPi * k / 10000.0;
        CHECK(lobachevsky(x) <= peak + 1e-14);
    }
}

TEST_CASE("duplication identity") {
    for (int k = 0; k < 200; ++k) {
        const double x = uniform(-3.0, 3.0);
        const double lhs = lobachevsky(2.0 * x);
        const double rhs = 2.0 * lobachevsky(x) + 2.0 * lobachevsky(x + kPi / 2.0);
        CHECK(std::abs(lhs - rhs) < 1e-13);
    }
}

TEST_CASE("orthoscheme volume") {
    CHECK(orthoscheme_volume(0.0, kPi / 2.0, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(orthoscheme_volume(kPi / 3.0, kPi / 6.0, kPi / 3.0) ==
          doctest::Approx(0.5 * lobachevsky(kPi / 3.0)).epsilon(1e-13));
    CHECK(orthoscheme_volume(kPi / 3.0, kPi / 6.0, kPi / 3.0) ==
          doctest::Approx(0.1691569440).epsilon(1e-7));

    // Ideal-case consistency: a12 = pi/2 - a01, a23 = a01 -> L(a01)/2.
    for (int k = 1; k <= 40; ++k) {
        const double a = k * (kPi / 2.0) / 41.0;
        CHECK(std::abs(orthoscheme_volume(a, kPi / 2.0 - a, a) - 0.5 * lobachevsky(a)) < 1e-10);
    }

    CHECK_THROWS_AS(orthoscheme_volume(kPi / 2.0, 0.5, kPi / 2.0), DomainError);
    CHECK_THROWS_AS(orthoscheme_volume(-0.1, 0.5, 0.5), DomainError);
    CHECK(orthoscheme_volume(0.3, 0.4, 0.5) > 0.0);
}

TEST_CASE("ideal tetrahedron volumes") {
    const double reg = milnor_tet_volume(kPi / 3.0, kPi / 3.0);
    CHECK(reg == doctest::Approx(3.0 * lobachevsky(kPi / 3.0)).epsilon(1e-15));
    CHECK(reg == doctest::Approx(1.0149416).epsilon(1e-6));
    CHECK(reg == doctest::Approx(3.0 * testoracle::lobachevsky_quadrature(kPi / 3.0))
                     .epsilon(1e-10));

    CHECK(milnor_tet_volume(kPi / 2.0, kPi / 4.0) ==
          doctest::Approx(0.9159655941772190).epsilon(1e-12));

    for (int k = 0; k < 100; ++k) {
        const double a = uniform(0.1, 1.4), b = uniform(0.1, std::min(1.4, kPi - a - 0.05));
        CHECK(milnor_tet_volume(a, b) == milnor_tet_volume(b, a));
        CHECK(milnor_tet_volume(a, b) > 0.0);
    }
    CHECK_THROWS_AS(milnor_tet_volume(2.0, 1.5), DomainError);
    CHECK_THROWS_AS(milnor_tet_volume(-0.2, 0.5), DomainError);
}

TEST_CASE("plane-symmetric tetrahedron volume") {
    for (int k = 1; k < 40; ++k) {
        const double a = k * (kPi / 2.0) / 40.0;
        const double v = symmetric_tet_volume(a);
        CHECK(std::abs(v - milnor_tet_volume(a, a)) < 1e-12);
        // Both closed forms agree.
        CHECK(std::abs(v - (2.0 * lobachevsky(a) - lobachevsky(2.0 * a))) < 1e-12);
    }
    CHECK(symmetric_tet_volume(kPi / 2.0 - 1e-8) < 1e-6);
    CHECK_THROWS_AS(symmetric_tet_volume(0.0), DomainError);
    CHECK_THROWS_AS(symmetric_tet_volume(kPi / 2.0), DomainError);
}

TEST_CASE("angle map") {
    CHECK(alpha_from_z(0.0) == doctest::Approx(kPi / 3.0).epsilon(1e-15));
    const double z1 = (-2.0 + 6.0 * std::sqrt(3.0)) / 13.0;
    CHECK(alpha_from_z(z1) == doctest::Approx(5.0 * kPi / 12.0).epsilon(1e-13));
    CHECK(alpha_from_z(z1) == doctest::Approx(1.30899694).epsilon(1e-8));
    CHECK(alpha_from_z(0.9061774494) == doctest::Approx(1.44340117).epsilon(1e-7));

    double prev = alpha_from_z(-0.999);
    for (int k = 1; k <= 2000; ++k) {
        const double z = -0.999 + 1.998 * k / 2000.0;
        const double a = alpha_from_z(z);
        CHECK(a > prev);
        prev = a;
    }
    CHECK_THROWS_AS(alpha_from_z(1.0), DomainError);
    CHECK_THROWS_AS(alpha_from_z(-1.2), DomainError);
}

TEST_CASE("angle map variant with the (z-2) denominator fails the regular case") {
    const double v = detail::alpha_from_z_rejected_variant(0.0);
    CHECK(v == doctest::Approx(kPi / 6.0).epsilon(1e-12));
    CHECK(std::abs(v - kPi / 3.0) > 0.1);
}

TEST_CASE("volume from the shape parameter") {
    CHECK(tet_volume_from_z(0.0) == doctest::Approx(1.0149416).epsilon(1e-6));
    // Decays to zero toward z = 1, though only logarithmically fast.
    CHECK(tet_volume_from_z(0.9999) < tet_volume_from_z(0.99));
    CHECK(tet_volume_from_z(1.0 - 1e-8) < 2e-3);
    const double a = alpha_from_z(-0.5);
    CHECK(std::abs(tet_volume_from_z(-0.5) - milnor_tet_volume(a, a)) < 1e-12);
    for (int k = 1; k < 20; ++k)
        CHECK(tet_volume_from_z(-0.95 + 1.9 * k / 20.0) > 0.0);
}
