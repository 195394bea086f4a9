#pragma once

#include "symsector/kernels.hpp"

namespace symsector::kernels::detail {

double norm_sq_scalar(const cplx* x, std::size_t len);
void scale_scalar(cplx* x, std::size_t len, double factor);
void gram_scalar(const cplx* m, std::size_t rows, std::size_t cols, cplx* out);

#if defined(SYMSECTOR_HAVE_AVX2)
double norm_sq_avx2(const cplx* x, std::size_t len);
void scale_avx2(cplx* x, std::size_t len, double factor);
void gram_avx2(const cplx* m, std::size_t rows, std::size_t cols, cplx* out);
#endif

#if defined(SYMSECTOR_HAVE_NEON)
double norm_sq_neon(const cplx* x, std::size_t len);
void scale_neon(cplx* x, std::size_t len, double factor);
void gram_neon(const cplx* m, std::size_t rows, std::size_t cols, cplx* out);
#endif

} // namespace symsector::kernels::detail
