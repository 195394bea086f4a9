#pragma once

#include "symsector/geometry.hpp"

#include <Eigen/Dense>

#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace symsector {

struct SubspaceBasis;

/// Unit vector over the d^n computational basis, or over the coordinates of
/// a sector basis when one is attached.
class PureState {
public:
    /// Full-space form. Throws if the squared norm is not within 1e-12 of 1.
    PureState(QuditGeometry geometry, std::vector<cplx> amplitudes);
    /// Sector-coordinate form; amplitudes are coefficients over basis->elements.
    PureState(QuditGeometry geometry, std::vector<cplx> coordinates, std::shared_ptr<const SubspaceBasis> basis);

    const QuditGeometry& geometry() const noexcept { return geometry_; }
    std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
    bool is_full_space() const noexcept { return basis_ == nullptr; }
    const std::shared_ptr<const SubspaceBasis>& basis() const noexcept { return basis_; }

    /// Full-space copy (identity for full-space states).
    PureState expanded() const;

private:
    QuditGeometry geometry_;
    std::vector<cplx> amplitudes_;
    std::shared_ptr<const SubspaceBasis> basis_;
};

/// Hermitian, unit-trace matrix. Construction checks hermiticity (1e-12) and trace (1e-10).
class DensityOperator {
public:
    explicit DensityOperator(Eigen::MatrixXcd matrix);

    Index dimension() const noexcept { return static_cast<Index>(matrix_.rows()); }
    const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }

    /// tr(ρ²) computed from the entries (Σ |ρ_ij|²), independent of the spectrum.
    double purity() const;

private:
    Eigen::MatrixXcd matrix_;
};

/// ⟨x|y⟩ over full-space amplitudes.
cplx inner_product(const PureState& x, const PureState& y);

PureState apply_translation(const PureState& state, int k);

/// perm[i] is the destination site of site i (0-based): the digit at site i
/// moves to site perm[i], so u(σ)u(τ) = u(σ∘τ).
PureState apply_site_permutation(const PureState& state, std::span<const int> perm);

/// ρ_A = tr_Ā |φ⟩⟨φ|, i.e. M·M† for the d^{n_A} x d^{n_Ā} reshaped amplitudes.
DensityOperator partial_trace(const PureState& state);

/// ρ_Ā = tr_A |φ⟩⟨φ|.
DensityOperator partial_trace_complement(const PureState& state);

/// Eigenvalues in descending order, negative round-off clamped to 0.
std::vector<double> hermitian_spectrum(const DensityOperator& rho);

} // namespace symsector
