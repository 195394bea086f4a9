#include "kernels_impl.hpp"

#include <arm_neon.h>

namespace symsector::kernels::detail {

double norm_sq_neon(const cplx* x, std::size_t len) {
    const double* p = reinterpret_cast<const double*>(x);
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        const float64x2_t a = vld1q_f64(p + 2 * i);
        const float64x2_t b = vld1q_f64(p + 2 * i + 2);
        acc0 = vfmaq_f64(acc0, a, a);
        acc1 = vfmaq_f64(acc1, b, b);
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < len; ++i) acc += p[2 * i] * p[2 * i] + p[2 * i + 1] * p[2 * i + 1];
    return acc;
}

void scale_neon(cplx* x, std::size_t len, double factor) {
    double* p = reinterpret_cast<double*>(x);
    for (std::size_t i = 0; i < len; ++i) vst1q_f64(p + 2 * i, vmulq_n_f64(vld1q_f64(p + 2 * i), factor));
}

void gram_neon(const cplx* m, std::size_t rows, std::size_t cols, cplx* out) {
    for (std::size_t a = 0; a < rows; ++a) {
        const double* ra = reinterpret_cast<const double*>(m + a * cols);
        for (std::size_t b = a; b < rows; ++b) {
            const double* rb = reinterpret_cast<const double*>(m + b * cols);
            float64x2_t acc_re = vdupq_n_f64(0.0);
            float64x2_t acc_im = vdupq_n_f64(0.0);
            for (std::size_t v = 0; v < cols; ++v) {
                const float64x2_t x = vld1q_f64(ra + 2 * v);
                const float64x2_t y = vld1q_f64(rb + 2 * v);
                acc_re = vfmaq_f64(acc_re, x, y);
                acc_im = vfmaq_f64(acc_im, x, vextq_f64(y, y, 1));
            }
            const double re = vaddvq_f64(acc_re);
            const double im = vgetq_lane_f64(acc_im, 1) - vgetq_lane_f64(acc_im, 0);
            out[a * rows + b] = {re, im};
            out[b * rows + a] = {re, -im};
        }
        out[a * rows + a].imag(0.0);
    }
}

} // namespace symsector::kernels::detail
