#include "horopack/kernels/column_kernel.hpp"

#include <cmath>

namespace horo::kernels {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kRhoFracMin = 1e-7; // columns this close to the cusp axis carry ~0 volume
} // namespace

// Reference implementation. The z-integral of the ball-model volume density
// 1/(1 - x^2 - y^2 - z^2)^2 over the column [zlo, zhi] is
//   G(z) = z / (2 a^2 (a^2 - z^2)) + atanh(z/a) / (2 a^3),  a^2 = 1 - x^2 - y^2,
// and a^2 - z^2 at the ellipsoid top is expanded in cancellation-free form
// (the horosphere has quartic contact with the unit sphere at the apex).
void column_kernel_scalar(const ColumnBatch& batch, const double* u1, const double* u2,
                          double* out, std::size_t n) {
    const double s = batch.s;
    const double b2 = 0.5 * (1.0 - s); // squared shadow-disk radius
    const double b = std::sqrt(b2);
    const double zc = 0.5 * (s + 1.0);
    const double cax = 0.5 * (1.0 - s);

    for (std::size_t i = 0; i < n; ++i) {
        const double f = u1[i];
        if (f < kRhoFracMin) {
            out[i] = 0.0;
            continue;
        }
        const double theta = kTwoPi * u2[i];
        const double rho = b * f;
        const double x = rho * std::cos(theta);
        const double y = rho * std::sin(theta);
        const double jac = kTwoPi * b2 * f;

        const double rho2 = rho * rho;
        const double a2 = 1.0 - rho2;
        const double a = std::sqrt(a2);

        const double root = std::sqrt(1.0 - f * f);
        double zlo = zc - cax * root;
        double zhi = zc + cax * root;
        // a^2 - z^2 at the two ellipsoid endpoints, stable at the top.
        const double dhi_e = (1.0 + s) * rho2 * f * f / (2.0 * (1.0 + root) * (1.0 + root));
        const double dlo_e = 0.5 * (1.0 + s) * ((1.0 - s) * (1.0 + root) - rho2);

        bool hi_from_plane = false, lo_from_plane = false, feasible = true;
        for (int k = 0; k < batch.nplanes; ++k) {
            const PlaneRow& p = batch.planes[k];
            const double val = p.u0 + p.u1 * x + p.u2 * y;
            if (p.u3 > 0.0) {
                const double bound = -val / p.u3;
                if (bound > zlo) {
                    zlo = bound;
                    lo_from_plane = true;
                }
            } else if (p.u3 < 0.0) {
                const double bound = -val / p.u3;
                if (bound < zhi) {
                    zhi = bound;
                    hi_from_plane = true;
                }
            } else if (val < 0.0) {
                feasible = false;
            }
        }
        if (!feasible || !(zhi > zlo)) {
            out[i] = 0.0;
            continue;
        }

        const double dhi = hi_from_plane ? (a2 - zhi * zhi) : dhi_e;
        const double dlo = lo_from_plane ? (a2 - zlo * zlo) : dlo_e;
        const double rational = (zhi / dhi - zlo / dlo) / (2.0 * a2);
        const double ahi = a + zhi;
        const double alo = a + zlo;
        const double lg = std::log((ahi * ahi * dlo) / (alo * alo * dhi));
        out[i] = jac * (rational + lg / (4.0 * a2 * a));
    }
}

} // namespace horo::kernels
