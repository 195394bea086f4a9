#pragma once

#include "symsector/sectors.hpp"
#include "symsector/state.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace symsector {

/// Ω = tr_{traced} Π_G / D_G for one side of the bipartition.
struct OmegaState {
    SectorSpec sector;
    int n_a = 1;                   ///< size of the kept block (A, or Ā for the complement)
    DensityOperator matrix;
    std::vector<double> spectrum;  ///< descending
    Index rank = 0;                ///< eigenvalues above 1e-12
    double purity = 0.0;           ///< tr Ω²
    double entropy = 0.0;          ///< S(Ω) in nats
};

/// Ω_G^(A) for A = the leading n_a sites, by streaming contraction over the
/// sector basis (Π is never formed).
OmegaState omega_reduced(const SectorSpec& spec, int n_a);
OmegaState omega_reduced(const SubspaceBasis& basis, int n_a);

/// tr_A Π_G / D_G, supported on the trailing n - n_a sites.
OmegaState omega_complement(const SubspaceBasis& basis, int n_a);

/// D_eff^(Ā) = 1 / tr(tr_A Π_G / D_G)².
double effective_dimension(const SectorSpec& spec, int n_a);
double effective_dimension(const SubspaceBasis& basis, int n_a);

/// Thread-safe memo of omega_reduced keyed by (SectorSpec, n_a).
class OmegaCache {
public:
    std::shared_ptr<const OmegaState> get(const SectorSpec& spec, int n_a);

private:
    std::mutex mutex_;
    std::map<std::pair<SectorSpec, int>, std::shared_ptr<const OmegaState>> entries_;
};

bool is_prime(int n);

/// Correction to the uniform-string diagonal: n-1 for θ = 0, -1 otherwise;
/// equivalently n·D_{T,θ} = d^n + m_θ·d at prime n.
int m_theta(int n, int k);

/// Closed-form diagonal entry ω_{aa} of the momentum-sector Ω at prime n.
/// `a_index` encodes the n_A-site string a_A.
double momentum_diagonal(int n, int d, int n_a, int k, Index a_index);

/// Every off-diagonal |ω_ab| of a momentum-sector Ω is at most 1/D.
double offdiagonal_bound(Index sector_dim);

/// Γ_A = Σ over occupations (m_0..m_{d-1}), Σm = n_a, of M² - M with M the
/// multinomial n_a!/(m_0!…m_{d-1}!). Exact; throws std::overflow_error.
Index gamma_sum(int n_a, int d);

/// n_a!/(m_0!…m_{d-1}!), exact.
Index multinomial(std::span<const int> occupation);

/// Closed-form upper bound on tr Ω_{T,θ}² at prime n.
double purity_upper_bound(int n, int d, int n_a, int k);

struct SbarMomentum {
    double exact;       ///< -ln purity_upper_bound, a rigorous lower bound on S(Ω)
    double asymptotic;  ///< n_A ln d - n²/d^{2n-3n_A}
};
SbarMomentum sbar_momentum(int n, int d, int n_a, int k);

/// -x ln x on [0, 1/e], 1/e beyond.
double eta0(double x);

/// distance·ln(dim) + η₀(distance), distance measured in the full trace norm.
double fannes_audenaert_bound(double trace_distance, double dim);

/// exp(-D_G ε² / 18π³)
double concentration_probability(double sector_dim, double eps);

struct ConcentrationParams {
    double eps = 0.0;
    double eps_prime = 0.0;  ///< ε + √(rank Ω / D_eff)
    double d_eff = 0.0;
    double rank = 0.0;
    double r_bound = 0.0;    ///< upper bound on R_φ
    double prob_bound = 0.0;
};
ConcentrationParams concentration_params(const SectorSpec& spec, int n_a, double eps);

struct Interval {
    double center = 0.0;
    double halfwidth = 0.0;
    double failure_prob = 1.0;
    double eps_prime = 0.0;
    bool non_informative = false;
};

/// |E - S(Ω)| <= ε' ln R + η₀(ε') with R = d^{n_A} (full, momentum) or D^(A)_{P,±}.
Interval concentration_interval(const SectorSpec& spec, int n_a, double eps);

/// Permutation sectors in closed form; sign = +1 symmetric, -1 antisymmetric.
Interval permutation_interval(int n, int d, int n_a, double eps, int sign);

struct MomentumLowerBound {
    double lower_bound = 0.0;
    double failure_prob = 1.0;
    double eps_prime = 0.0;
    bool eps_prime_exact = false;  ///< false: asymptotic ε + n d^{-n_A/2}
    bool non_informative = false;
};
/// E^(A) >= S̄ - ε'(n_A ln d - ln ε') for the momentum sector at prime n.
/// ε' is exact when d^n <= exact_cap, otherwise its leading asymptotic form.
MomentumLowerBound momentum_lower_bound(int n, int d, int n_a, int k, double eps, Index exact_cap = Index{1} << 16);

/// n_A ln d - d^{-n+2n_A-1}; throws when n_A > n - n_A.
double page_lower_bound(int n, int d, int n_a);

/// Exact Haar mean of E^(A): Σ_{k=N+1}^{mN} 1/k - (m-1)/(2N), m <= N the two dimensions.
double page_mean_entropy(int n, int d, int n_a);

/// Exact Haar mean of tr ρ_A²: (d^{n_A} + d^{n_Ā}) / (d^n + 1).
double haar_mean_purity(int n, int d, int n_a);

/// Dimension as a double (for dimensions too large for Index).
double sector_dimension_real(SectorKind kind, int n, int d, int k = 0);

} // namespace symsector
