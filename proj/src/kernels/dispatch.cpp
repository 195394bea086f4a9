#include "kernels_impl.hpp"

#include "symsector/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace symsector::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &detail::norm_sq_scalar, &detail::scale_scalar, &detail::gram_scalar};
#if defined(SYMSECTOR_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, &detail::norm_sq_avx2, &detail::scale_avx2, &detail::gram_avx2};
#endif
#if defined(SYMSECTOR_HAVE_NEON)
constexpr KernelTable kNeon{Isa::Neon, &detail::norm_sq_neon, &detail::scale_neon, &detail::gram_neon};
#endif

bool cpu_supports(Isa isa) {
    switch (isa) {
    case Isa::Scalar:
        return true;
    case Isa::Avx2:
#if defined(SYMSECTOR_HAVE_AVX2)
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    case Isa::Neon:
#if defined(SYMSECTOR_HAVE_NEON)
        return true;
#else
        return false;
#endif
    }
    return false;
}

const KernelTable& resolve() {
    const std::vector<Isa> isas = available();
    if (const char* env = std::getenv("SYMSECTOR_KERNEL")) {
        const std::string want(env);
        for (Isa isa : isas)
            if (isa_name(isa) == want) return table(isa);
        if (want != "auto") throw InvalidArgument("SYMSECTOR_KERNEL=" + want + " is not available on this machine");
    }
    return table(isas.back());
}

} // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
    }
    return "unknown";
}

const KernelTable& scalar_table() { return kScalar; }

std::vector<Isa> available() {
    std::vector<Isa> out{Isa::Scalar};
    for (Isa isa : {Isa::Avx2, Isa::Neon})
        if (cpu_supports(isa)) out.push_back(isa);
    return out;
}

const KernelTable& table(Isa isa) {
    if (!cpu_supports(isa)) throw InvalidArgument("kernel variant " + std::string(isa_name(isa)) + " unavailable");
    switch (isa) {
#if defined(SYMSECTOR_HAVE_AVX2)
    case Isa::Avx2: return kAvx2;
#endif
#if defined(SYMSECTOR_HAVE_NEON)
    case Isa::Neon: return kNeon;
#endif
    default: return kScalar;
    }
}

const KernelTable& active() {
    static const KernelTable& chosen = resolve();
    return chosen;
}

} // namespace symsector::kernels
