#include "kernels_impl.hpp"

#include <immintrin.h>

namespace symsector::kernels::detail {

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

} // namespace

double norm_sq_avx2(const cplx* x, std::size_t len) {
    const double* p = reinterpret_cast<const double*>(x);
    const std::size_t n = 2 * len;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d a = _mm256_loadu_pd(p + i);
        const __m256d b = _mm256_loadu_pd(p + i + 4);
        acc0 = _mm256_fmadd_pd(a, a, acc0);
        acc1 = _mm256_fmadd_pd(b, b, acc1);
    }
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(p + i);
        acc0 = _mm256_fmadd_pd(a, a, acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += p[i] * p[i];
    return acc;
}

void scale_avx2(cplx* x, std::size_t len, double factor) {
    double* p = reinterpret_cast<double*>(x);
    const std::size_t n = 2 * len;
    const __m256d f = _mm256_set1_pd(factor);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) _mm256_storeu_pd(p + i, _mm256_mul_pd(_mm256_loadu_pd(p + i), f));
    for (; i < n; ++i) p[i] *= factor;
}

void gram_avx2(const cplx* m, std::size_t rows, std::size_t cols, cplx* out) {
    // Each __m256d holds two complex values [re0 im0 re1 im1].
    //   re(x·conj(y)) = xr*yr + xi*yi          -> acc_re += x * y
    //   im(x·conj(y)) = xi*yr - xr*yi          -> acc_im += x * swap(y) with sign folded in later
    for (std::size_t a = 0; a < rows; ++a) {
        const double* ra = reinterpret_cast<const double*>(m + a * cols);
        for (std::size_t b = a; b < rows; ++b) {
            const double* rb = reinterpret_cast<const double*>(m + b * cols);
            __m256d acc_re = _mm256_setzero_pd();
            __m256d acc_im = _mm256_setzero_pd();
            std::size_t v = 0;
            for (; v + 2 <= cols; v += 2) {
                const __m256d x = _mm256_loadu_pd(ra + 2 * v);
                const __m256d y = _mm256_loadu_pd(rb + 2 * v);
                acc_re = _mm256_fmadd_pd(x, y, acc_re);
                // swap(y) = [yi yr ...]; x*swap(y) = [xr*yi, xi*yr, ...]
                acc_im = _mm256_fmadd_pd(x, _mm256_permute_pd(y, 0b0101), acc_im);
            }
            double re = hsum(acc_re);
            alignas(32) double t[4];
            _mm256_store_pd(t, acc_im);
            double im = (t[1] + t[3]) - (t[0] + t[2]);
            for (; v < cols; ++v) {
                const double xr = ra[2 * v], xi = ra[2 * v + 1];
                const double yr = rb[2 * v], yi = rb[2 * v + 1];
                re += xr * yr + xi * yi;
                im += xi * yr - xr * yi;
            }
            out[a * rows + b] = {re, im};
            out[b * rows + a] = {re, -im};
        }
        out[a * rows + a].imag(0.0);
    }
}

} // namespace symsector::kernels::detail
