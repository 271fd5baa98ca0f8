#include "horopack/kernels/column_kernel.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace horo::kernels {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kRhoFracMin = 1e-7;

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

// log(x) for positive finite x: mantissa/exponent split, atanh series in
// r = (m-1)/(m+1) with |r| <= (sqrt2-1)/(sqrt2+1).
inline __m256d log_pd(__m256d x) {
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i exp_field = _mm256_srli_epi64(bits, 52);

    // biased exponent -> double via the 2^52 magic-constant trick
    const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);
    const __m256d e_biased =
        _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(exp_field, magic)),
                      _mm256_set1_pd(4503599627370496.0));
    __m256d e = _mm256_sub_pd(e_biased, splat(1023.0));

    const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
    const __m256i one_bits = _mm256_set1_epi64x(0x3FF0000000000000LL);
    __m256d m = _mm256_castsi256_pd(
        _mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_bits)); // [1, 2)

    const __m256d sqrt2 = splat(1.4142135623730951);
    const __m256d gt = _mm256_cmp_pd(m, sqrt2, _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, splat(0.5)), gt);
    e = _mm256_add_pd(e, _mm256_and_pd(gt, splat(1.0)));

    const __m256d one = splat(1.0);
    const __m256d r = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
    const __m256d r2 = _mm256_mul_pd(r, r);
    // 2*atanh(r), Horner in r^2
    __m256d p = splat(2.0 / 17.0);
    p = _mm256_fmadd_pd(p, r2, splat(2.0 / 15.0));
    p = _mm256_fmadd_pd(p, r2, splat(2.0 / 13.0));
    p = _mm256_fmadd_pd(p, r2, splat(2.0 / 11.0));
    p = _mm256_fmadd_pd(p, r2, splat(2.0 / 9.0));
    p = _mm256_fmadd_pd(p, r2, splat(2.0 / 7.0));
    p = _mm256_fmadd_pd(p, r2, splat(2.0 / 5.0));
    p = _mm256_fmadd_pd(p, r2, splat(2.0 / 3.0));
    p = _mm256_fmadd_pd(p, r2, splat(2.0));
    p = _mm256_mul_pd(p, r);

    const __m256d ln2_hi = splat(0.693147180369123816490);
    const __m256d ln2_lo = splat(1.90821492927058770002e-10);
    return _mm256_add_pd(_mm256_fmadd_pd(e, ln2_hi, p), _mm256_mul_pd(e, ln2_lo));
}

// sin and cos for theta in [0, 2pi): quadrant reduction + Taylor on [-pi/4, pi/4].
inline void sincos_pd(__m256d theta, __m256d& s_out, __m256d& c_out) {
    const __m256d two_over_pi = splat(0.63661977236758134308);
    const __m256d q = _mm256_round_pd(_mm256_mul_pd(theta, two_over_pi),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    const __m256d pio2_hi = splat(1.5707963267948966);
    const __m256d pio2_lo = splat(6.123233995736766e-17);
    __m256d r = _mm256_fnmadd_pd(q, pio2_hi, theta);
    r = _mm256_fnmadd_pd(q, pio2_lo, r);
    const __m256d r2 = _mm256_mul_pd(r, r);

    __m256d sp = splat(-7.64716373181981647590e-13); // -1/15!
    sp = _mm256_fmadd_pd(sp, r2, splat(1.60590438368216145994e-10));
    sp = _mm256_fmadd_pd(sp, r2, splat(-2.50521083854417187751e-8));
    sp = _mm256_fmadd_pd(sp, r2, splat(2.75573192239198747630e-6));
    sp = _mm256_fmadd_pd(sp, r2, splat(-1.98412698412698412698e-4));
    sp = _mm256_fmadd_pd(sp, r2, splat(8.33333333333333333333e-3));
    sp = _mm256_fmadd_pd(sp, r2, splat(-1.66666666666666666667e-1));
    sp = _mm256_fmadd_pd(sp, r2, splat(1.0));
    sp = _mm256_mul_pd(sp, r);

    __m256d cp = splat(4.77947733238738529744e-14); // 1/16!
    cp = _mm256_fmadd_pd(cp, r2, splat(-1.14707455977297247139e-11));
    cp = _mm256_fmadd_pd(cp, r2, splat(2.08767569878680989792e-9));
    cp = _mm256_fmadd_pd(cp, r2, splat(-2.75573192239198747630e-7));
    cp = _mm256_fmadd_pd(cp, r2, splat(2.48015873015873015873e-5));
    cp = _mm256_fmadd_pd(cp, r2, splat(-1.38888888888888888889e-3));
    cp = _mm256_fmadd_pd(cp, r2, splat(4.16666666666666666667e-2));
    cp = _mm256_fmadd_pd(cp, r2, splat(-0.5));
    cp = _mm256_fmadd_pd(cp, r2, splat(1.0));

    // quadrant bookkeeping in the double domain
    const __m256d quarter = splat(0.25);
    const __m256d half = splat(0.5);
    const __m256d qmod2 = _mm256_fnmadd_pd(_mm256_floor_pd(_mm256_mul_pd(q, half)), splat(2.0), q);
    const __m256d qmod4 =
        _mm256_fnmadd_pd(_mm256_floor_pd(_mm256_mul_pd(q, quarter)), splat(4.0), q);
    const __m256d qp1mod4 = _mm256_fnmadd_pd(
        _mm256_floor_pd(_mm256_mul_pd(_mm256_add_pd(q, splat(1.0)), quarter)), splat(4.0),
        _mm256_add_pd(q, splat(1.0)));

    const __m256d swap = _mm256_cmp_pd(qmod2, half, _CMP_GT_OQ);          // q odd
    const __m256d sin_neg = _mm256_cmp_pd(qmod4, splat(1.5), _CMP_GT_OQ); // q mod 4 in {2,3}
    const __m256d cos_neg = _mm256_cmp_pd(qp1mod4, splat(1.5), _CMP_GT_OQ);

    const __m256d signbit = splat(-0.0);
    __m256d s = _mm256_blendv_pd(sp, cp, swap);
    __m256d c = _mm256_blendv_pd(cp, sp, swap);
    s = _mm256_xor_pd(s, _mm256_and_pd(sin_neg, signbit));
    c = _mm256_xor_pd(c, _mm256_and_pd(cos_neg, signbit));
    s_out = s;
    c_out = c;
}

} // namespace

void column_kernel_avx2(const ColumnBatch& batch, const double* u1, const double* u2, double* out,
                        std::size_t n) {
    const double s_par = batch.s;
    const double b2s = 0.5 * (1.0 - s_par);
    const __m256d b2 = splat(b2s);
    const __m256d b = _mm256_sqrt_pd(b2);
    const __m256d zc = splat(0.5 * (s_par + 1.0));
    const __m256d cax = splat(0.5 * (1.0 - s_par));
    const __m256d one = splat(1.0);
    const __m256d two_pi = splat(kTwoPi);
    const __m256d one_plus_s = splat(1.0 + s_par);
    const __m256d one_minus_s = splat(1.0 - s_par);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d f = _mm256_loadu_pd(u1 + i);
        const __m256d uv = _mm256_loadu_pd(u2 + i);

        __m256d sn, cs;
        sincos_pd(_mm256_mul_pd(two_pi, uv), sn, cs);
        const __m256d rho = _mm256_mul_pd(b, f);
        const __m256d x = _mm256_mul_pd(rho, cs);
        const __m256d y = _mm256_mul_pd(rho, sn);
        const __m256d jac = _mm256_mul_pd(two_pi, _mm256_mul_pd(b2, f));

        const __m256d rho2 = _mm256_mul_pd(rho, rho);
        const __m256d a2 = _mm256_sub_pd(one, rho2);
        const __m256d a = _mm256_sqrt_pd(a2);

        const __m256d f2 = _mm256_mul_pd(f, f);
        const __m256d root = _mm256_sqrt_pd(_mm256_max_pd(_mm256_sub_pd(one, f2), splat(0.0)));
        const __m256d h = _mm256_mul_pd(cax, root);
        const __m256d zlo_e = _mm256_sub_pd(zc, h);
        const __m256d zhi_e = _mm256_add_pd(zc, h);
        const __m256d onep = _mm256_add_pd(one, root);
        // a^2 - z^2 at the ellipsoid endpoints (top form is cancellation-free)
        const __m256d dhi_e = _mm256_div_pd(
            _mm256_mul_pd(one_plus_s, _mm256_mul_pd(rho2, f2)),
            _mm256_mul_pd(splat(2.0), _mm256_mul_pd(onep, onep)));
        const __m256d dlo_e = _mm256_mul_pd(
            _mm256_mul_pd(splat(0.5), one_plus_s),
            _mm256_sub_pd(_mm256_mul_pd(one_minus_s, onep), rho2));

        __m256d zlo = zlo_e, zhi = zhi_e;
        __m256d feasible = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
        for (int k = 0; k < batch.nplanes; ++k) {
            const PlaneRow& p = batch.planes[k];
            __m256d val = _mm256_fmadd_pd(splat(p.u2), y,
                                          _mm256_fmadd_pd(splat(p.u1), x, splat(p.u0)));
            if (p.u3 > 0.0) {
                const __m256d bound = _mm256_mul_pd(val, splat(-1.0 / p.u3));
                zlo = _mm256_max_pd(zlo, bound);
            } else if (p.u3 < 0.0) {
                const __m256d bound = _mm256_mul_pd(val, splat(-1.0 / p.u3));
                zhi = _mm256_min_pd(zhi, bound);
            } else {
                feasible = _mm256_and_pd(feasible, _mm256_cmp_pd(val, splat(0.0), _CMP_GE_OQ));
            }
        }
        __m256d mask = _mm256_and_pd(feasible, _mm256_cmp_pd(zhi, zlo, _CMP_GT_OQ));
        mask = _mm256_and_pd(mask, _mm256_cmp_pd(f, splat(kRhoFracMin), _CMP_GE_OQ));

        const __m256d hi_plane = _mm256_cmp_pd(zhi, zhi_e, _CMP_NEQ_OQ);
        const __m256d lo_plane = _mm256_cmp_pd(zlo, zlo_e, _CMP_NEQ_OQ);
        const __m256d dhi = _mm256_blendv_pd(
            dhi_e, _mm256_fnmadd_pd(zhi, zhi, a2), hi_plane);
        const __m256d dlo = _mm256_blendv_pd(
            dlo_e, _mm256_fnmadd_pd(zlo, zlo, a2), lo_plane);

        const __m256d rational = _mm256_div_pd(
            _mm256_sub_pd(_mm256_div_pd(zhi, dhi), _mm256_div_pd(zlo, dlo)),
            _mm256_mul_pd(splat(2.0), a2));
        const __m256d ahi = _mm256_add_pd(a, zhi);
        const __m256d alo = _mm256_add_pd(a, zlo);
        const __m256d num = _mm256_mul_pd(_mm256_mul_pd(ahi, ahi), dlo);
        const __m256d den = _mm256_mul_pd(_mm256_mul_pd(alo, alo), dhi);
        const __m256d lg = log_pd(_mm256_div_pd(num, den));
        const __m256d log_term =
            _mm256_div_pd(lg, _mm256_mul_pd(splat(4.0), _mm256_mul_pd(a2, a)));
        const __m256d val = _mm256_mul_pd(jac, _mm256_add_pd(rational, log_term));
        _mm256_storeu_pd(out + i, _mm256_and_pd(mask, val));
    }
    if (i < n)
        column_kernel_scalar(batch, u1 + i, u2 + i, out + i, n - i);
}

} // namespace horo::kernels

#endif // __AVX2__ && __FMA__
