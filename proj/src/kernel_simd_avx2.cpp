// AVX2+FMA backend for the batched kernels. Compiled with -mavx2 -mfma and
// only reached after a runtime cpuid check, so plain intrinsics throughout.
#include <cstddef>

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>
#include <numbers>

namespace coorbital::simd::avx2 {

namespace {

// Cody-Waite reduction by pi/2 (33-bit + tail split, exact for quadrant
// counts up to ~2^20) followed by the standard minimax polynomials on
// [-pi/4, pi/4]. Valid for y in [0, ~8], which covers every argument the
// kernels produce; relative accuracy ~1 ulp.
inline void sincos4(__m256d y, __m256d& sin_out, __m256d& cos_out) {
    const __m256d two_over_pi = _mm256_set1_pd(0.63661977236758134308);
    const __m256d pio2_hi = _mm256_set1_pd(1.57079632673412561417e+00);
    const __m256d pio2_lo = _mm256_set1_pd(6.07710050650619224932e-11);

    const __m256d qd = _mm256_round_pd(_mm256_mul_pd(y, two_over_pi),
                                       _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(qd, pio2_hi, y);
    r = _mm256_fnmadd_pd(qd, pio2_lo, r);
    const __m256d r2 = _mm256_mul_pd(r, r);

    // sin(r) = r + r^3 * S(r^2)
    __m256d sp = _mm256_set1_pd(1.58962301576546568060e-10);
    sp = _mm256_fmadd_pd(sp, r2, _mm256_set1_pd(-2.50507477628578072866e-08));
    sp = _mm256_fmadd_pd(sp, r2, _mm256_set1_pd(2.75573136213857245213e-06));
    sp = _mm256_fmadd_pd(sp, r2, _mm256_set1_pd(-1.98412698295895385996e-04));
    sp = _mm256_fmadd_pd(sp, r2, _mm256_set1_pd(8.33333333332211858878e-03));
    sp = _mm256_fmadd_pd(sp, r2, _mm256_set1_pd(-1.66666666666666307295e-01));
    const __m256d sinr = _mm256_fmadd_pd(_mm256_mul_pd(r, r2), sp, r);

    // cos(r) = 1 - r^2/2 + r^4 * C(r^2)
    __m256d cp = _mm256_set1_pd(-1.13585365213876817300e-11);
    cp = _mm256_fmadd_pd(cp, r2, _mm256_set1_pd(2.08757008419747316778e-09));
    cp = _mm256_fmadd_pd(cp, r2, _mm256_set1_pd(-2.75573141792967388112e-07));
    cp = _mm256_fmadd_pd(cp, r2, _mm256_set1_pd(2.48015872888517179954e-05));
    cp = _mm256_fmadd_pd(cp, r2, _mm256_set1_pd(-1.38888888888730564116e-03));
    cp = _mm256_fmadd_pd(cp, r2, _mm256_set1_pd(4.16666666666665929218e-02));
    const __m256d r4 = _mm256_mul_pd(r2, r2);
    const __m256d cosr = _mm256_fmadd_pd(
        r4, cp, _mm256_fnmadd_pd(_mm256_set1_pd(0.5), r2, _mm256_set1_pd(1.0)));

    // quadrant swizzle: q odd swaps sin/cos, q in {2,3} negates sin,
    // q in {1,2} negates cos
    const __m128i qi = _mm256_cvtpd_epi32(qd);
    const __m256i q64 = _mm256_cvtepi32_epi64(qi);
    const __m256i one = _mm256_set1_epi64x(1);
    const __m256i two = _mm256_set1_epi64x(2);
    const __m256d swap = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(_mm256_and_si256(q64, one), one));
    const __m256d neg_sin = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(_mm256_and_si256(q64, two), two));
    const __m256d neg_cos = _mm256_castsi256_pd(_mm256_cmpeq_epi64(
        _mm256_and_si256(_mm256_add_epi64(q64, one), two), two));
    const __m256d signbit = _mm256_set1_pd(-0.0);

    sin_out = _mm256_xor_pd(_mm256_blendv_pd(sinr, cosr, swap),
                            _mm256_and_pd(neg_sin, signbit));
    cos_out = _mm256_xor_pd(_mm256_blendv_pd(cosr, sinr, swap),
                            _mm256_and_pd(neg_cos, signbit));
}

// sin(t) * (1 - 1/(8 s^3)) given sin(t) and s = sin(t/2)
inline __m256d f_from_halves(__m256d sint, __m256d s_half) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d eight = _mm256_set1_pd(8.0);
    const __m256d s3 = _mm256_mul_pd(_mm256_mul_pd(s_half, s_half), s_half);
    const __m256d inv = _mm256_div_pd(one, _mm256_mul_pd(eight, s3));
    return _mm256_mul_pd(sint, _mm256_sub_pd(one, inv));
}

} // namespace

// n is rounded down to a multiple of 4 by the dispatcher; remainders take
// the scalar path.
void eval_f_batch(const double* x, double* out, std::size_t n) {
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d two = _mm256_set1_pd(2.0);
    for (std::size_t i = 0; i + 4 <= n; i += 4) {
        const __m256d xi = _mm256_loadu_pd(x + i);
        __m256d s2, c2;
        sincos4(_mm256_mul_pd(half, xi), s2, c2);
        const __m256d sinx = _mm256_mul_pd(two, _mm256_mul_pd(s2, c2));
        _mm256_storeu_pd(out + i, f_from_halves(sinx, s2));
    }
}

void eval_g_batch(double a2, double a3, const double* x, double* out,
                  std::size_t n) {
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d va2 = _mm256_set1_pd(a2);
    const __m256d va3 = _mm256_set1_pd(a3);
    for (std::size_t i = 0; i + 4 <= n; i += 4) {
        const __m256d xi = _mm256_loadu_pd(x + i);
        // one half-angle sincos feeds all three terms: for x in (0, pi),
        //   sin(x)   = 2 s2 c2        s2 = sin(x/2), c2 = cos(x/2), both > 0
        //   sin(2x)  = 2 sin(x) cos(x),  sin(x) is the half-sine of 2x
        //   sin(pi+x)= -sin(x),          cos(x/2) is the half-sine of pi+x
        __m256d s2, c2;
        sincos4(_mm256_mul_pd(half, xi), s2, c2);
        const __m256d sinx = _mm256_mul_pd(two, _mm256_mul_pd(s2, c2));
        const __m256d cosx = _mm256_fmsub_pd(c2, c2, _mm256_mul_pd(s2, s2));
        const __m256d sin2x = _mm256_mul_pd(two, _mm256_mul_pd(sinx, cosx));

        const __m256d fx = f_from_halves(sinx, s2);
        const __m256d f2x = f_from_halves(sin2x, sinx);
        const __m256d fpx = f_from_halves(_mm256_xor_pd(sinx, _mm256_set1_pd(-0.0)), c2);

        __m256d g = _mm256_fmadd_pd(va2, f2x, fx);
        g = _mm256_fmadd_pd(va3, fpx, g);
        _mm256_storeu_pd(out + i, g);
    }
}

} // namespace coorbital::simd::avx2

#endif // x86-64
