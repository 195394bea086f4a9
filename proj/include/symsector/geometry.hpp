#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace symsector {

using cplx = std::complex<double>;
using Index = std::uint64_t;
using Digits = std::vector<int>;

/// Default ceiling on d^n for anything that materializes full-space data.
inline constexpr Index kDefaultSizeCap = Index{1} << 24;

/// Current cap: SYMSECTOR_SIZE_CAP if set, else kDefaultSizeCap.
Index size_cap();

/// Throws SizeCapExceeded when dim > size_cap().
void require_within_cap(Index dim, const char* what);

/// d^n, or throws InvalidArgument when it does not fit in Index.
Index checked_pow(int d, int n);

/// n qudits of local dimension d split as A = sites 1..n_A, Ā = the rest.
class QuditGeometry {
public:
    QuditGeometry(int n, int d, int n_a);

    int n() const noexcept { return n_; }
    int d() const noexcept { return d_; }
    int n_a() const noexcept { return n_a_; }
    int n_abar() const noexcept { return n_ - n_a_; }

    Index full_dim() const noexcept { return full_dim_; }
    Index dim_a() const noexcept { return dim_a_; }
    Index dim_abar() const noexcept { return full_dim_ / dim_a_; }

    friend bool operator==(const QuditGeometry&, const QuditGeometry&) = default;

private:
    int n_;
    int d_;
    int n_a_;
    Index full_dim_;
    Index dim_a_;
};

/// Site 1 is the most significant digit.
Index encode_index(std::span<const int> digits, int d);
Digits decode_index(Index index, int n, int d);

/// Right cyclic rotation applied k times: c_1..c_n -> c_n c_1..c_{n-1}.
Digits rotate_string(std::span<const int> digits, int k);

/// Same rotation acting directly on an encoded index (one step).
inline Index rotate_index_once(Index index, int d, Index top_weight) {
    const Index last = index % static_cast<Index>(d);
    return last * top_weight + index / static_cast<Index>(d);
}

/// "0101"-style label; levels >= 10 are written as letters.
std::string config_string(Index index, int n, int d);

} // namespace symsector
