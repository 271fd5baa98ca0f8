#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "horopack/kernels/column_kernel.hpp"
#include "horopack/horoball.hpp"
#include "horopack/tetrahedron.hpp"

using namespace horo;
using namespace horo::kernels;

namespace {

std::mt19937_64 rng(90901);
double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// A batch built from a real trihedron so the plane rows are representative.
ColumnBatch batch_from_tetra(double z, int vertex, double s) {
    const SymmetricTetrahedron tet = build_tetrahedron(z);
    const Horoball h(tet.vertex[vertex], s);
    const Transform4 t = transport_to_center(h.center);
    const auto o = tet.others(vertex);
    ColumnBatch b;
    b.s = s;
    b.nplanes = 3;
    for (int k = 0; k < 3; ++k) {
        PlaneCovector u = plane_from_points(h.center, tet.vertex[o[(k + 1) % 3]],
                                            tet.vertex[o[(k + 2) % 3]]);
        if (u.value(tet.vertex[o[k]]) < 0.0)
            u = PlaneCovector(-u.u[0], -u.u[1], -u.u[2], -u.u[3]);
        const PlaneCovector uc = t.apply_to_covector(u);
        double scale = 0.0;
        for (int i = 0; i < 4; ++i)
            scale = std::max(scale, std::abs(uc.u[i]));
        b.planes[k] = {uc.u[0] / scale, uc.u[1] / scale, uc.u[2] / scale, uc.u[3] / scale};
    }
    return b;
}

} // namespace

TEST_CASE("kernel selection reports a name") {
    CHECK(std::strlen(column_kernel_name()) > 0);
    CHECK(select_column_kernel(KernelKind::Scalar) == column_kernel_scalar);
    if (!avx2_kernel_available())
        CHECK(select_column_kernel(KernelKind::Avx2) == column_kernel_scalar);
}

TEST_CASE("scalar kernel matches a direct midpoint integration on one column") {
    // One column, capped by a plane so the density stays smooth over the
    // clipped range; the weighted output must equal a fine midpoint
    // summation of the raw density over [zlo, zcap].
    const double s = 0.3;
    ColumnBatch b;
    b.s = s;
    b.nplanes = 1;
    const double zcap = 0.5;
    b.planes[0] = {zcap, 0.0, 0.0, -1.0}; // keep z <= zcap
    const double u1 = 0.43, u2 = 0.17;
    double out = 0.0;
    column_kernel_scalar(b, &u1, &u2, &out, 1);

    const double brad = std::sqrt(0.5 * (1.0 - s));
    const double rho = brad * u1;
    const double zc = 0.5 * (s + 1.0);
    const double h = 0.5 * (1.0 - s) * std::sqrt(1.0 - u1 * u1);
    const double a2 = 1.0 - rho * rho;
    const double zlo = zc - h;
    const long n = 400000;
    double acc = 0.0;
    for (long i = 0; i < n; ++i) {
        const double zz = zlo + (zcap - zlo) * (i + 0.5) / n;
        const double d = a2 - zz * zz;
        acc += 1.0 / (d * d);
    }
    const double column = acc * (zcap - zlo) / n;
    const double expected = column * (2.0 * 3.14159265358979323846 * brad * brad * u1);
    CHECK(out == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("scalar and AVX2 kernels are equivalent") {
    if (!avx2_kernel_available()) {
        MESSAGE("AVX2 not available; skipping equivalence check");
        return;
    }
    const ColumnKernelFn avx2 = select_column_kernel(KernelKind::Avx2);
    REQUIRE(avx2 != column_kernel_scalar);

    for (int trial = 0; trial < 6; ++trial) {
        const double z = uniform(-0.7, 0.8);
        const int vertex = static_cast<int>(rng() % 4);
        const double s = uniform(-0.6, 0.85);
        const ColumnBatch b = batch_from_tetra(z, vertex, s);

        const std::size_t n = 4096 + (rng() % 7); // exercise the remainder path
        std::vector<double> u1(n), u2(n), out_s(n), out_v(n);
        for (std::size_t i = 0; i < n; ++i) {
            u1[i] = uniform(0.0, 1.0);
            u2[i] = uniform(0.0, 1.0);
        }
        column_kernel_scalar(b, u1.data(), u2.data(), out_s.data(), n);
        avx2(b, u1.data(), u2.data(), out_v.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            const double tol = 1e-12 * std::max(1.0, std::abs(out_s[i]));
            CHECK(std::abs(out_s[i] - out_v[i]) <= tol);
        }
    }
}

TEST_CASE("kernels are deterministic") {
    const ColumnBatch b = batch_from_tetra(0.35, 3, 0.1);
    const std::size_t n = 1024;
    std::vector<double> u1(n), u2(n), o1(n), o2(n);
    for (std::size_t i = 0; i < n; ++i) {
        u1[i] = uniform(0.0, 1.0);
        u2[i] = uniform(0.0, 1.0);
    }
    const ColumnKernelFn k = select_column_kernel();
    k(b, u1.data(), u2.data(), o1.data(), n);
    k(b, u1.data(), u2.data(), o2.data(), n);
    CHECK(std::memcmp(o1.data(), o2.data(), n * sizeof(double)) == 0);
}
