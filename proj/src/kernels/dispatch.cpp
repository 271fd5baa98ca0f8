#include "horopack/kernels/column_kernel.hpp"

#include <cstdlib>
#include <cstring>

namespace horo::kernels {

bool avx2_kernel_available() {
#if defined(HOROPACK_HAVE_AVX2_KERNEL)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

KernelKind env_override() {
    const char* v = std::getenv("HOROPACK_SIMD");
    if (v == nullptr)
        return KernelKind::Auto;
    if (std::strcmp(v, "scalar") == 0)
        return KernelKind::Scalar;
    if (std::strcmp(v, "avx2") == 0)
        return KernelKind::Avx2;
    return KernelKind::Auto;
}

KernelKind resolve(KernelKind kind) {
    if (kind == KernelKind::Auto)
        kind = env_override();
    if (kind == KernelKind::Avx2 && !avx2_kernel_available())
        kind = KernelKind::Scalar;
    if (kind == KernelKind::Auto)
        kind = avx2_kernel_available() ? KernelKind::Avx2 : KernelKind::Scalar;
    return kind;
}

} // namespace

ColumnKernelFn select_column_kernel(KernelKind kind) {
#if defined(HOROPACK_HAVE_AVX2_KERNEL)
    if (resolve(kind) == KernelKind::Avx2)
        return column_kernel_avx2;
#endif
    (void)kind;
    return column_kernel_scalar;
}

const char* column_kernel_name(KernelKind kind) {
    return resolve(kind) == KernelKind::Avx2 ? "avx2" : "scalar";
}

} // namespace horo::kernels
