#pragma once

#include "symsector/state.hpp"

#include <limits>
#include <span>
#include <vector>

namespace symsector {

inline constexpr double kInfiniteOrder = std::numeric_limits<double>::infinity();

/// Eigenvalues below this are treated as exact zeros in entropies.
inline constexpr double kSpectrumFloor = 1e-14;

/// Rényi-q entropy in nats of a descending spectrum. q=1 is von Neumann,
/// q=0 is log rank (λ > 1e-12), q=∞ is -log λ_max. Throws for q < 0.
double renyi_entropy(std::span<const double> spectrum, double q);
double renyi_entropy(const DensityOperator& rho, double q);

double von_neumann_entropy(std::span<const double> spectrum);

/// s = exp((1-q)(E_q - n_A ln d)); for q=2 this is d^{n_A} tr ρ_A². Throws for q = 1.
double rescaled_s(double eq_nats, double q, int n_a, int d);

struct EntanglementRecord {
    double e1 = 0.0;   ///< von Neumann entropy of ρ_A (nats)
    double eq = 0.0;   ///< Rényi-q entropy (nats)
    double q = 2.0;
    double s = 0.0;    ///< rescaled entanglement; NaN when q = 1
    std::vector<double> spectrum_head;
};

/// Measure everything recorded per sample, from one ρ_A and one eigen-decomposition.
EntanglementRecord measure_entanglement(const PureState& state, double q, std::size_t head = 4);

} // namespace symsector
