#include <doctest.h>

#include <cmath>
#include <tuple>

#include "horopack/sector_oracle.hpp"

using namespace horo;

TEST_CASE("metric-ball Monte Carlo reproduces the closed-form volume") {
    const double r = 0.1;
    const OracleResult res = oracle_metric_ball_volume(r, 2000000, 4242);
    const double exact = 3.14159265358979323846 * (std::sinh(2.0 * r) - 2.0 * r);
    CHECK(std::abs(res.volume - exact) / exact < 5e-3);
    CHECK(res.converged);
    // Empty region.
    CHECK(oracle_metric_ball_volume(1e-9, 1000, 1).volume < 1e-20);
}

TEST_CASE("oracle reproduces the regular-case sector volume") {
    const SymmetricTetrahedron tet = build_tetrahedron(0.0);
    const double exact = std::sqrt(3.0) / 8.0; // = 0.2165063509...
    for (int vertex : {3, 1}) {
        const double s = vertex == 3 ? 1.0 / 7.0 : 1.0 / 7.0;
        const OracleResult res = oracle_sector_volume(tet, vertex, s);
        CHECK(res.converged);
        CHECK(res.error_estimate <= 1e-6 * res.volume);
        CHECK(std::abs(res.volume - exact) / exact < 1e-5);
    }
    // The moving-vertex ball of the regular arrangement has s = 1/2.
    const OracleResult res0 = oracle_sector_volume(tet, 0, 0.5);
    CHECK(std::abs(res0.volume - exact) / exact < 1e-5);
}

TEST_CASE("oracle agrees with the intrinsic-area route off the regular case") {
    const std::tuple<double, int, double> cases[] = {
        {0.45, 3, 0.05}, {0.45, 0, 0.62}, {-0.3, 1, 0.2}};
    for (auto [z, vertex, s] : cases) {
        const SymmetricTetrahedron tet = build_tetrahedron(z);
        const double direct = tetra_sector_volume(tet, vertex, s);
        const OracleResult res = oracle_sector_volume(tet, vertex, s);
        CHECK(std::abs(res.volume - direct) / direct < 1e-5);
    }
}

TEST_CASE("oracle kernel variants agree") {
    const SymmetricTetrahedron tet = build_tetrahedron(0.3);
    OracleOptions scalar_opts;
    scalar_opts.kernel = kernels::KernelKind::Scalar;
    const OracleResult a = oracle_sector_volume(tet, 3, 0.1, scalar_opts);
    OracleOptions vec_opts;
    vec_opts.kernel = kernels::KernelKind::Avx2; // falls back to scalar if absent
    const OracleResult b = oracle_sector_volume(tet, 3, 0.1, vec_opts);
    CHECK(std::abs(a.volume - b.volume) / a.volume < 1e-9);
}

TEST_CASE("oracle rejects a ball crossing its opposite face") {
    const SymmetricTetrahedron tet = build_tetrahedron(0.0);
    CHECK_THROWS_AS(oracle_sector_volume(tet, 3, -0.9), PackingViolation);
}
