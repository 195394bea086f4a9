#include "symsector/sectors.hpp"

#include "symsector/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

namespace symsector {

namespace {

void check_nd(int n, int d) {
    if (n < 1) throw InvalidArgument("sector: need n >= 1");
    if (d < 2) throw InvalidArgument("sector: need d >= 2");
    checked_pow(d, n);
}

// e^{-2πi·num/den} with the numerator reduced first.
cplx unit_phase(long long num, long long den) {
    const long long r = ((num % den) + den) % den;
    if (r == 0) return {1.0, 0.0};
    if (2 * r == den) return {-1.0, 0.0};
    if (4 * r == den) return {0.0, -1.0};
    if (4 * r == 3 * den) return {0.0, 1.0};
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

int mobius(long long m) {
    int result = 1;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0) return 0;
        result = -result;
    }
    if (m > 1) result = -result;
    return result;
}

// c_q(k) = Σ_{m | gcd(q,k)} μ(q/m)·m
long long ramanujan_sum(long long q, long long k) {
    const long long g = std::gcd(q, k);
    long long sum = 0;
    for (long long m = 1; m <= g; ++m)
        if (g % m == 0) sum += mobius(q / m) * m;
    return sum;
}

// Every distinct arrangement of `levels` (given sorted), in lexicographic order.
template <typename Fn>
void for_each_arrangement(std::vector<int> levels, Fn&& fn) {
    do {
        fn(levels);
    } while (std::next_permutation(levels.begin(), levels.end()));
}

int inversion_parity(const std::vector<int>& v) {
    int parity = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) parity ^= 1;
    return parity;
}

// Sorted multisets of size n over 0..d-1 (non-decreasing sequences), lexicographic.
std::vector<std::vector<int>> sorted_multisets(int n, int d, bool strictly_increasing) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < d; ++v) {
            cur.push_back(v);
            self(self, strictly_increasing ? v + 1 : v);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

SectorSpec SectorSpec::full(int n, int d) {
    check_nd(n, d);
    return {SectorKind::Full, n, d, 0};
}

SectorSpec SectorSpec::symmetric(int n, int d) {
    check_nd(n, d);
    return {SectorKind::Symmetric, n, d, 0};
}

SectorSpec SectorSpec::antisymmetric(int n, int d) {
    check_nd(n, d);
    if (n > d) throw SectorMissing(fmt::format("antisymmetric sector needs n <= d (got n={}, d={})", n, d));
    return {SectorKind::Antisymmetric, n, d, 0};
}

SectorSpec SectorSpec::momentum(int n, int d, int k) {
    check_nd(n, d);
    return {SectorKind::Momentum, n, d, ((k % n) + n) % n};
}

double SectorSpec::theta() const {
    return kind == SectorKind::Momentum ? 2.0 * std::numbers::pi * k / n : 0.0;
}

std::string SectorSpec::label() const {
    if (kind == SectorKind::Momentum) return fmt::format("mom(k={}) n={} d={}", k, n, d);
    return fmt::format("{} n={} d={}", kind_name(kind), n, d);
}

std::string_view kind_name(SectorKind kind) {
    switch (kind) {
    case SectorKind::Full: return "full";
    case SectorKind::Symmetric: return "sym";
    case SectorKind::Antisymmetric: return "antisym";
    case SectorKind::Momentum: return "mom";
    }
    return "?";
}

SectorKind parse_kind(std::string_view name) {
    for (SectorKind k : {SectorKind::Full, SectorKind::Symmetric, SectorKind::Antisymmetric, SectorKind::Momentum})
        if (kind_name(k) == name) return k;
    throw InvalidArgument(fmt::format("unknown sector '{}' (expected full, sym, antisym, mom)", name));
}

std::vector<OrbitClass> enumerate_orbits(int n, int d) {
    check_nd(n, d);
    const Index dim = checked_pow(d, n);
    require_within_cap(dim, "enumerate_orbits");
    const Index top = dim / static_cast<Index>(d);
    const double n2 = static_cast<double>(n) * n;
    std::vector<OrbitClass> out;
    for (Index c = 0; c < dim; ++c) {
        Index x = c;
        int period = 0;
        bool smallest = true;
        for (int p = 1; p <= n; ++p) {
            x = rotate_index_once(x, d, top);
            if (x == c) {
                period = p;
                break;
            }
            if (x < c) {
                smallest = false;
                break;
            }
        }
        if (smallest) out.push_back({c, period, period / n2});
    }
    return out;
}

SubspaceBasis momentum_basis(const SectorSpec& spec) {
    if (spec.kind != SectorKind::Momentum) throw InvalidArgument("momentum_basis: spec is not a momentum sector");
    const int n = spec.n;
    const int d = spec.d;
    const Index top = checked_pow(d, n) / static_cast<Index>(d);
    SubspaceBasis basis{spec, {}};
    for (const OrbitClass& orbit : enumerate_orbits(n, d)) {
        if ((static_cast<long long>(spec.k) * orbit.period) % n != 0) continue;  // |c⟩_θ vanishes
        // |c⟩_θ = √α Σ_{j<n} e^{-iθj} T^j|c⟩; the j and j+p terms land on the same string.
        const double amp = std::sqrt(orbit.alpha) * (static_cast<double>(n) / orbit.period);
        SparseVector v{{}, orbit.representative};
        Index x = orbit.representative;
        for (int j = 0; j < orbit.period; ++j) {
            v.terms.emplace_back(x, amp * unit_phase(static_cast<long long>(spec.k) * j, n));
            x = rotate_index_once(x, d, top);
        }
        std::sort(v.terms.begin(), v.terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.elements.push_back(std::move(v));
    }
    return basis;
}

SubspaceBasis symmetric_basis(int n, int d) {
    const SectorSpec spec = SectorSpec::symmetric(n, d);
    SubspaceBasis basis{spec, {}};
    for (const std::vector<int>& levels : sorted_multisets(n, d, false)) {
        SparseVector v{{}, encode_index(levels, d)};
        for_each_arrangement(levels, [&](const std::vector<int>& arr) { v.terms.emplace_back(encode_index(arr, d), cplx{1.0, 0.0}); });
        const double norm = 1.0 / std::sqrt(static_cast<double>(v.terms.size()));
        for (auto& t : v.terms) t.second *= norm;
        basis.elements.push_back(std::move(v));
    }
    return basis;
}

SubspaceBasis antisymmetric_basis(int n, int d) {
    const SectorSpec spec = SectorSpec::antisymmetric(n, d);
    SubspaceBasis basis{spec, {}};
    for (const std::vector<int>& levels : sorted_multisets(n, d, true)) {
        SparseVector v{{}, encode_index(levels, d)};
        for_each_arrangement(levels, [&](const std::vector<int>& arr) {
            v.terms.emplace_back(encode_index(arr, d), cplx{inversion_parity(arr) ? -1.0 : 1.0, 0.0});
        });
        const double norm = 1.0 / std::sqrt(static_cast<double>(v.terms.size()));
        for (auto& t : v.terms) t.second *= norm;
        basis.elements.push_back(std::move(v));
    }
    return basis;
}

SubspaceBasis full_basis(int n, int d) {
    const SectorSpec spec = SectorSpec::full(n, d);
    const Index dim = checked_pow(d, n);
    require_within_cap(dim, "full_basis");
    SubspaceBasis basis{spec, {}};
    basis.elements.reserve(dim);
    for (Index i = 0; i < dim; ++i) basis.elements.push_back({{{i, cplx{1.0, 0.0}}}, i});
    return basis;
}

SubspaceBasis build_basis(const SectorSpec& spec) {
    switch (spec.kind) {
    case SectorKind::Full: return full_basis(spec.n, spec.d);
    case SectorKind::Symmetric: return symmetric_basis(spec.n, spec.d);
    case SectorKind::Antisymmetric: return antisymmetric_basis(spec.n, spec.d);
    case SectorKind::Momentum: return momentum_basis(spec);
    }
    throw InvalidArgument("build_basis: unknown sector kind");
}

Index binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<Index>::max()) throw InvalidArgument(fmt::format("binomial({}, {}) overflows", n, k));
    }
    return static_cast<Index>(r);
}

Index sector_dimension(const SectorSpec& spec) {
    const int n = spec.n;
    const int d = spec.d;
    switch (spec.kind) {
    case SectorKind::Full: return checked_pow(d, n);
    case SectorKind::Symmetric: return binomial(n + d - 1, d - 1);
    case SectorKind::Antisymmetric:
        if (n > d) throw SectorMissing("antisymmetric sector needs n <= d");
        return binomial(d, n);
    case SectorKind::Momentum: {
        // dim = (1/n) Σ_{j<n} e^{-iθj} tr u(T)^j, with tr u(T)^j = d^{gcd(j,n)};
        // grouping j by g = gcd(j, n) turns the phase sums into Ramanujan sums c_{n/g}(k).
        __int128 total = 0;
        for (int g = 1; g <= n; ++g)
            if (n % g == 0) total += static_cast<__int128>(checked_pow(d, g)) * ramanujan_sum(n / g, spec.k);
        return static_cast<Index>(total / n);
    }
    }
    throw InvalidArgument("sector_dimension: unknown sector kind");
}

Eigen::MatrixXcd projector(const SubspaceBasis& basis, Index dense_cap) {
    const Index dim = checked_pow(basis.spec.d, basis.spec.n);
    if (dim > dense_cap)
        throw SizeCapExceeded(fmt::format("projector: dense {}x{} matrix refused (cap {}); use apply_projector", dim, dim, dense_cap));
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const SparseVector& b : basis.elements)
        for (const auto& [i, ci] : b.terms)
            for (const auto& [j, cj] : b.terms) p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += ci * std::conj(cj);
    return p;
}

std::vector<cplx> apply_projector(const SubspaceBasis& basis, std::span<const cplx> x) {
    const Index dim = checked_pow(basis.spec.d, basis.spec.n);
    if (x.size() != dim) throw InvalidArgument("apply_projector: vector length differs from d^n");
    std::vector<cplx> out(x.size());
    for (const SparseVector& b : basis.elements) {
        cplx overlap{0.0, 0.0};
        for (const auto& [i, c] : b.terms) overlap += std::conj(c) * x[i];
        for (const auto& [i, c] : b.terms) out[i] += c * overlap;
    }
    return out;
}

std::vector<cplx> expand_coordinates(const SubspaceBasis& basis, std::span<const cplx> coordinates) {
    if (coordinates.size() != basis.dimension()) throw InvalidArgument("expand_coordinates: wrong coordinate count");
    const Index dim = checked_pow(basis.spec.d, basis.spec.n);
    require_within_cap(dim, "expand_coordinates");
    std::vector<cplx> out(dim);
    for (std::size_t e = 0; e < coordinates.size(); ++e)
        for (const auto& [i, c] : basis.elements[e].terms) out[i] += coordinates[e] * c;
    return out;
}

} // namespace symsector
