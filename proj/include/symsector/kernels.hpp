#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference in
// kernels_scalar.cpp; SIMD variants must agree with it to rounding.

#include "symsector/geometry.hpp"

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace symsector::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

struct KernelTable {
    Isa isa;
    /// Σ |x_i|^2
    double (*norm_sq)(const cplx* x, std::size_t len);
    /// x_i *= factor
    void (*scale)(cplx* x, std::size_t len, double factor);
    /// out[a*rows + b] = Σ_v m[a*cols + v] · conj(m[b*cols + v]); out is rows x rows row-major.
    void (*gram)(const cplx* m, std::size_t rows, std::size_t cols, cplx* out);
};

const KernelTable& scalar_table();

/// Variants this binary was built with and the CPU can run (scalar always first).
std::vector<Isa> available();

/// Table for a specific variant; throws InvalidArgument if unavailable.
const KernelTable& table(Isa isa);

/// Best available variant, or the one named by SYMSECTOR_KERNEL (scalar|avx2|neon).
/// Resolved once per process.
const KernelTable& active();

inline double norm_sq(std::span<const cplx> x) { return active().norm_sq(x.data(), x.size()); }
inline void scale(std::span<cplx> x, double factor) { active().scale(x.data(), x.size(), factor); }

} // namespace symsector::kernels
