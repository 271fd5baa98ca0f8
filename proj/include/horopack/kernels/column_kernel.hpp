#pragma once

#include <cstddef>

namespace horo::kernels {

/// Half-space constraint row in canonical-frame affine coordinates:
/// keep u0 + u1*x + u2*y + u3*z >= 0.
struct PlaneRow {
    double u0 = 0.0, u1 = 0.0, u2 = 0.0, u3 = 0.0;
};

/// One integration batch: the canonical horoball of size s (apex at z = 1,
/// shadow disk of radius sqrt((1-s)/2) about the origin) clipped by up to
/// three half-spaces through the apex.
struct ColumnBatch {
    double s = 0.0;
    int nplanes = 0;
    PlaneRow planes[3];
};

/// Evaluates, for each unit-square lattice point (u1[i], u2[i]), the
/// hyperbolic volume of the column through the clipped horoball at the polar
/// point (rho, theta) = (b*u1[i], 2*pi*u2[i]), weighted by the polar
/// Jacobian. Averaging out[] over a lattice estimates the region volume.
using ColumnKernelFn = void (*)(const ColumnBatch& batch, const double* u1, const double* u2,
                                double* out, std::size_t n);

void column_kernel_scalar(const ColumnBatch& batch, const double* u1, const double* u2,
                          double* out, std::size_t n);

#if defined(HOROPACK_HAVE_AVX2_KERNEL)
void column_kernel_avx2(const ColumnBatch& batch, const double* u1, const double* u2, double* out,
                        std::size_t n);
#endif

enum class KernelKind { Auto, Scalar, Avx2 };

/// Runtime kernel selection: AVX2 when the CPU supports it, overridable by
/// the HOROPACK_SIMD environment variable ("scalar" or "avx2").
ColumnKernelFn select_column_kernel(KernelKind kind = KernelKind::Auto);
const char* column_kernel_name(KernelKind kind = KernelKind::Auto);
bool avx2_kernel_available();

} // namespace horo::kernels
