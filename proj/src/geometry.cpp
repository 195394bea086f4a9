#include "symsector/geometry.hpp"

#include "symsector/errors.hpp"

#include <cstdlib>
#include <limits>

#include <fmt/format.h>

namespace symsector {

Index size_cap() {
    if (const char* env = std::getenv("SYMSECTOR_SIZE_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<Index>(v);
    }
    return kDefaultSizeCap;
}

void require_within_cap(Index dim, const char* what) {
    const Index cap = size_cap();
    if (dim > cap)
        throw SizeCapExceeded(fmt::format("{}: dimension {} exceeds size cap {} (set SYMSECTOR_SIZE_CAP)",
                                          what, dim, cap));
}

Index checked_pow(int d, int n) {
    if (d < 1 || n < 0) throw InvalidArgument("checked_pow: need d >= 1 and n >= 0");
    Index r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > std::numeric_limits<Index>::max() / static_cast<Index>(d))
            throw InvalidArgument(fmt::format("{}^{} overflows the 64-bit index type", d, n));
        r *= static_cast<Index>(d);
    }
    return r;
}

QuditGeometry::QuditGeometry(int n, int d, int n_a) : n_(n), d_(d), n_a_(n_a) {
    if (n < 2) throw InvalidArgument("geometry: need n >= 2");
    if (d < 2) throw InvalidArgument("geometry: need d >= 2");
    if (n_a < 1 || n_a > n - 1) throw InvalidArgument(fmt::format("geometry: need 1 <= n_A <= n-1 (got n_A={}, n={})", n_a, n));
    full_dim_ = checked_pow(d, n);
    dim_a_ = checked_pow(d, n_a);
}

Index encode_index(std::span<const int> digits, int d) {
    if (d < 2) throw InvalidArgument("encode_index: need d >= 2");
    if (digits.size() > 64) throw InvalidArgument("encode_index: too many digits");
    checked_pow(d, static_cast<int>(digits.size()));
    Index index = 0;
    for (int digit : digits) {
        if (digit < 0 || digit >= d) throw InvalidArgument(fmt::format("encode_index: digit {} outside 0..{}", digit, d - 1));
        index = index * static_cast<Index>(d) + static_cast<Index>(digit);
    }
    return index;
}

Digits decode_index(Index index, int n, int d) {
    if (index >= checked_pow(d, n)) throw InvalidArgument("decode_index: index out of range");
    Digits digits(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        digits[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<Index>(d));
        index /= static_cast<Index>(d);
    }
    return digits;
}

Digits rotate_string(std::span<const int> digits, int k) {
    if (k < 0) throw InvalidArgument("rotate_string: need k >= 0");
    const std::size_t n = digits.size();
    Digits out(n);
    if (n == 0) return out;
    const std::size_t shift = static_cast<std::size_t>(k) % n;
    for (std::size_t i = 0; i < n; ++i) out[(i + shift) % n] = digits[i];
    return out;
}

std::string config_string(Index index, int n, int d) {
    static constexpr char kSymbols[] = "0123456789abcdefghijklmnopqrstuvwxyz";
    const Digits digits = decode_index(index, n, d);
    std::string s;
    s.reserve(digits.size());
    for (int digit : digits) s.push_back(digit < 36 ? kSymbols[digit] : '?');
    return s;
}

} // namespace symsector
