#include "symsector/analytics.hpp"

#include "symsector/entanglement.hpp"
#include "symsector/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>

namespace symsector {

namespace {

constexpr Index kOmegaDimCap = 4096;
constexpr double kRankThreshold = 1e-12;

// 18π³
const double kLevyDenominator = 18.0 * std::pow(std::numbers::pi, 3);

void require_prime(int n, const char* what) {
    if (!is_prime(n)) throw RegimeError(fmt::format("{}: requires prime n (got n={})", what, n));
}

Eigen::MatrixXcd contract(const SubspaceBasis& basis, int n_a, bool keep_leading) {
    const int n = basis.spec.n;
    const int d = basis.spec.d;
    if (n_a < 1 || n_a > n - 1) throw InvalidArgument(fmt::format("omega: need 1 <= n_A <= n-1 (got n_A={}, n={})", n_a, n));
    if (basis.dimension() == 0) throw InvalidArgument("omega: empty sector");
    const Index trailing = checked_pow(d, n - n_a);
    const Index keep_dim = keep_leading ? checked_pow(d, n_a) : trailing;
    if (keep_dim > kOmegaDimCap) throw SizeCapExceeded(fmt::format("omega: reduced dimension {} exceeds {}", keep_dim, kOmegaDimCap));

    const auto kd = static_cast<Eigen::Index>(keep_dim);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(kd, kd);
    std::vector<std::tuple<Index, Index, cplx>> buf;  // (traced, kept, coefficient)
    for (const SparseVector& b : basis.elements) {
        buf.clear();
        for (const auto& [idx, c] : b.terms) {
            const Index lead = idx / trailing;
            const Index tail = idx % trailing;
            if (keep_leading) buf.emplace_back(tail, lead, c);
            else buf.emplace_back(lead, tail, c);
        }
        std::sort(buf.begin(), buf.end(), [](const auto& x, const auto& y) { return std::get<0>(x) < std::get<0>(y); });
        for (std::size_t lo = 0; lo < buf.size();) {
            std::size_t hi = lo;
            while (hi < buf.size() && std::get<0>(buf[hi]) == std::get<0>(buf[lo])) ++hi;
            for (std::size_t i = lo; i < hi; ++i)
                for (std::size_t j = lo; j < hi; ++j)
                    m(static_cast<Eigen::Index>(std::get<1>(buf[i])), static_cast<Eigen::Index>(std::get<1>(buf[j]))) +=
                        std::get<2>(buf[i]) * std::conj(std::get<2>(buf[j]));
            lo = hi;
        }
    }
    m /= static_cast<double>(basis.dimension());
    // Wash out last-bit asymmetry from the accumulation order.
    m = (0.5 * (m + m.adjoint())).eval();
    return m;
}

OmegaState make_omega(const SectorSpec& spec, int kept_sites, Eigen::MatrixXcd matrix) {
    DensityOperator rho(std::move(matrix));
    std::vector<double> spectrum = hermitian_spectrum(rho);
    const auto rank = static_cast<Index>(std::count_if(spectrum.begin(), spectrum.end(), [](double l) { return l > kRankThreshold; }));
    const double purity = rho.purity();
    const double entropy = von_neumann_entropy(spectrum);
    return OmegaState{spec, kept_sites, std::move(rho), std::move(spectrum), rank, purity, entropy};
}

// Multiplication with overflow detection.
Index mul_checked(Index a, Index b) {
    if (a != 0 && b > std::numeric_limits<Index>::max() / a) throw std::overflow_error("gamma_sum: integer overflow");
    return a * b;
}

double binomial_real(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    long double r = 1.0L;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<double>(r);
}

} // namespace

OmegaState omega_reduced(const SubspaceBasis& basis, int n_a) {
    return make_omega(basis.spec, n_a, contract(basis, n_a, true));
}

OmegaState omega_reduced(const SectorSpec& spec, int n_a) {
    return omega_reduced(build_basis(spec), n_a);
}

OmegaState omega_complement(const SubspaceBasis& basis, int n_a) {
    return make_omega(basis.spec, basis.spec.n - n_a, contract(basis, n_a, false));
}

double effective_dimension(const SubspaceBasis& basis, int n_a) {
    return 1.0 / omega_complement(basis, n_a).purity;
}

double effective_dimension(const SectorSpec& spec, int n_a) {
    return effective_dimension(build_basis(spec), n_a);
}

std::shared_ptr<const OmegaState> OmegaCache::get(const SectorSpec& spec, int n_a) {
    const auto key = std::make_pair(spec, n_a);
    {
        std::lock_guard lock(mutex_);
        if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    auto value = std::make_shared<const OmegaState>(omega_reduced(spec, n_a));
    std::lock_guard lock(mutex_);
    return entries_.try_emplace(key, std::move(value)).first->second;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

int m_theta(int n, int k) {
    return (((k % n) + n) % n == 0) ? n - 1 : -1;
}

double momentum_diagonal(int n, int d, int n_a, int k, Index a_index) {
    require_prime(n, "momentum_diagonal");
    if (n_a < 1 || n_a > n - 1) throw InvalidArgument("momentum_diagonal: need 1 <= n_A <= n-1");
    const Digits a = decode_index(a_index, n_a, d);
    const bool uniform = std::all_of(a.begin(), a.end(), [&](int x) { return x == a.front(); });
    const double dim = static_cast<double>(sector_dimension(SectorSpec::momentum(n, d, k)));
    const double tail = static_cast<double>(checked_pow(d, n - n_a));
    return (tail + (uniform ? m_theta(n, k) : 0)) / (n * dim);
}

double offdiagonal_bound(Index sector_dim) {
    if (sector_dim < 1) throw InvalidArgument("offdiagonal_bound: need D >= 1");
    return 1.0 / static_cast<double>(sector_dim);
}

Index multinomial(std::span<const int> occupation) {
    Index result = 1;
    int total = 0;
    for (int m : occupation) {
        if (m < 0) throw InvalidArgument("multinomial: negative occupation");
        total += m;
        // multiply by binom(total, m) incrementally
        for (int i = 1; i <= m; ++i) {
            const Index num = static_cast<Index>(total - m + i);
            const Index g = std::gcd(num, static_cast<Index>(i));
            result = mul_checked(result / (static_cast<Index>(i) / g), num / g);
        }
    }
    return result;
}

Index gamma_sum(int n_a, int d) {
    if (n_a < 0 || d < 1) throw InvalidArgument("gamma_sum: need n_A >= 0 and d >= 1");
    Index total = 0;
    std::vector<int> occ(static_cast<std::size_t>(d), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == d - 1) {
            occ[static_cast<std::size_t>(pos)] = left;
            const Index m = multinomial(occ);
            const Index term = mul_checked(m, m) - m;
            if (total > std::numeric_limits<Index>::max() - term) throw std::overflow_error("gamma_sum: integer overflow");
            total += term;
            return;
        }
        for (int v = 0; v <= left; ++v) {
            occ[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, n_a);
    return total;
}

double purity_upper_bound(int n, int d, int n_a, int k) {
    require_prime(n, "purity_upper_bound");
    if (n_a < 1 || n_a > n - 1) throw InvalidArgument("purity_upper_bound: need 1 <= n_A <= n-1");
    const double m = m_theta(n, k);
    const double dd = d;
    const double gamma = static_cast<double>(gamma_sum(n_a, d));
    const double shrink = 1.0 + m * std::pow(dd, 1 - n);
    const double prefactor = 1.0 / (std::pow(dd, n_a) * shrink * shrink);
    const double bracket = 1.0 + 2.0 * m / std::pow(dd, n - 1) + (m * m * dd + double(n) * n * gamma) / std::pow(dd, n + (n - n_a));
    return prefactor * bracket;
}

SbarMomentum sbar_momentum(int n, int d, int n_a, int k) {
    const double exact = -std::log(purity_upper_bound(n, d, n_a, k));
    const double asymptotic = n_a * std::log(double(d)) - double(n) * n / std::pow(double(d), 2 * n - 3 * n_a);
    return {exact, asymptotic};
}

double eta0(double x) {
    if (x < 0.0) throw InvalidArgument("eta0: need x >= 0");
    if (x == 0.0) return 0.0;
    const double inv_e = 1.0 / std::numbers::e;
    return x <= inv_e ? -x * std::log(x) : inv_e;
}

double fannes_audenaert_bound(double trace_distance, double dim) {
    if (trace_distance < 0.0 || dim < 1.0) throw InvalidArgument("fannes_audenaert_bound: need distance >= 0 and dim >= 1");
    return trace_distance * std::log(dim) + eta0(trace_distance);
}

double concentration_probability(double sector_dim, double eps) {
    if (!(eps > 0.0)) throw InvalidArgument("concentration_probability: need eps > 0");
    return std::exp(-sector_dim * eps * eps / kLevyDenominator);
}

double sector_dimension_real(SectorKind kind, int n, int d, int k) {
    switch (kind) {
    case SectorKind::Full: return std::pow(double(d), n);
    case SectorKind::Symmetric: return binomial_real(n + d - 1, d - 1);
    case SectorKind::Antisymmetric:
        if (n > d) throw SectorMissing("antisymmetric sector needs n <= d");
        return binomial_real(d, n);
    case SectorKind::Momentum:
        try {
            return static_cast<double>(sector_dimension(SectorSpec::momentum(n, d, k)));
        } catch (const InvalidArgument&) {
            return std::pow(double(d), n) / n;  // leading term once d^n overflows
        }
    }
    return 0.0;
}

ConcentrationParams concentration_params(const SectorSpec& spec, int n_a, double eps) {
    const SubspaceBasis basis = build_basis(spec);
    const OmegaState omega = omega_reduced(basis, n_a);
    ConcentrationParams p;
    p.eps = eps;
    p.d_eff = effective_dimension(basis, n_a);
    p.rank = static_cast<double>(omega.rank);
    p.eps_prime = eps + std::sqrt(p.rank / p.d_eff);
    if (spec.kind == SectorKind::Symmetric) p.r_bound = static_cast<double>(sector_dimension(SectorSpec::symmetric(n_a, spec.d)));
    else if (spec.kind == SectorKind::Antisymmetric) p.r_bound = static_cast<double>(sector_dimension(SectorSpec::antisymmetric(n_a, spec.d)));
    else p.r_bound = static_cast<double>(checked_pow(spec.d, n_a));
    p.prob_bound = concentration_probability(static_cast<double>(basis.dimension()), eps);
    return p;
}

Interval concentration_interval(const SectorSpec& spec, int n_a, double eps) {
    const ConcentrationParams p = concentration_params(spec, n_a, eps);
    Interval out;
    out.center = omega_reduced(spec, n_a).entropy;
    out.eps_prime = p.eps_prime;
    out.halfwidth = p.eps_prime * std::log(p.r_bound) + eta0(p.eps_prime);
    out.failure_prob = p.prob_bound;
    out.non_informative = p.eps_prime >= 1.0 || out.halfwidth > n_a * std::log(double(spec.d));
    return out;
}

Interval permutation_interval(int n, int d, int n_a, double eps, int sign) {
    if (sign != 1 && sign != -1) throw InvalidArgument("permutation_interval: sign must be +1 or -1");
    if (n_a < 1 || n_a > n - 1) throw InvalidArgument("permutation_interval: need 1 <= n_A <= n-1");
    if (!(eps > 0.0)) throw InvalidArgument("permutation_interval: need eps > 0");
    const SectorKind kind = sign > 0 ? SectorKind::Symmetric : SectorKind::Antisymmetric;
    const double dim_a = sector_dimension_real(kind, n_a, d);
    const double dim_abar = sector_dimension_real(kind, n - n_a, d);
    const double dim_all = sector_dimension_real(kind, n, d);
    Interval out;
    out.center = std::log(dim_a);
    out.eps_prime = eps + std::sqrt(dim_a / dim_abar);
    out.halfwidth = out.eps_prime * (std::log(dim_a) - std::log(out.eps_prime));
    out.failure_prob = concentration_probability(dim_all, eps);
    out.non_informative = out.eps_prime >= 1.0 || out.halfwidth > out.center;
    return out;
}

MomentumLowerBound momentum_lower_bound(int n, int d, int n_a, int k, double eps, Index exact_cap) {
    require_prime(n, "momentum_lower_bound");
    if (!(eps > 0.0)) throw InvalidArgument("momentum_lower_bound: need eps > 0");
    const SbarMomentum sbar = sbar_momentum(n, d, n_a, k);
    MomentumLowerBound out;
    const double full = std::pow(double(d), n);
    if (full <= static_cast<double>(exact_cap)) {
        const SubspaceBasis basis = momentum_basis(SectorSpec::momentum(n, d, k));
        const double rank = static_cast<double>(omega_reduced(basis, n_a).rank);
        out.eps_prime = eps + std::sqrt(rank / effective_dimension(basis, n_a));
        out.eps_prime_exact = true;
    } else {
        out.eps_prime = eps + n * std::pow(double(d), -n_a / 2.0);
    }
    const double ceiling = n_a * std::log(double(d));
    out.lower_bound = sbar.exact - out.eps_prime * (ceiling - std::log(out.eps_prime));
    out.failure_prob = concentration_probability(sector_dimension_real(SectorKind::Momentum, n, d, k), eps);
    out.non_informative = out.eps_prime >= 1.0 || out.lower_bound <= 0.0;
    return out;
}

double page_lower_bound(int n, int d, int n_a) {
    if (n_a < 0 || n_a > n - n_a) throw InvalidArgument(fmt::format("page_lower_bound: needs n_A <= n - n_A (got n_A={}, n={})", n_a, n));
    return n_a * std::log(double(d)) - std::pow(double(d), -n + 2 * n_a - 1);
}

double page_mean_entropy(int n, int d, int n_a) {
    double m = std::pow(double(d), n_a);
    double big = std::pow(double(d), n - n_a);
    if (m > big) std::swap(m, big);
    const auto hi = static_cast<long long>(m * big);
    const auto lo = static_cast<long long>(big);
    long double sum = 0.0L;
    for (long long j = hi; j > lo; --j) sum += 1.0L / j;
    return static_cast<double>(sum) - (m - 1.0) / (2.0 * big);
}

double haar_mean_purity(int n, int d, int n_a) {
    return (std::pow(double(d), n_a) + std::pow(double(d), n - n_a)) / (std::pow(double(d), n) + 1.0);
}

} // namespace symsector
