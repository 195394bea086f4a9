#include "kernels_impl.hpp"

namespace symsector::kernels::detail {

double norm_sq_scalar(const cplx* x, std::size_t len) {
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return acc;
}

void scale_scalar(cplx* x, std::size_t len, double factor) {
    for (std::size_t i = 0; i < len; ++i) x[i] *= factor;
}

void gram_scalar(const cplx* m, std::size_t rows, std::size_t cols, cplx* out) {
    for (std::size_t a = 0; a < rows; ++a) {
        const cplx* ra = m + a * cols;
        for (std::size_t b = a; b < rows; ++b) {
            const cplx* rb = m + b * cols;
            double re = 0.0, im = 0.0;
            for (std::size_t v = 0; v < cols; ++v) {
                // ra[v] * conj(rb[v])
                re += ra[v].real() * rb[v].real() + ra[v].imag() * rb[v].imag();
                im += ra[v].imag() * rb[v].real() - ra[v].real() * rb[v].imag();
            }
            out[a * rows + b] = {re, im};
            out[b * rows + a] = {re, -im};
        }
        out[a * rows + a].imag(0.0);
    }
}

} // namespace symsector::kernels::detail
