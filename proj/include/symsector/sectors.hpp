#pragma once

#include "symsector/geometry.hpp"

#include <Eigen/Dense>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symsector {

enum class SectorKind { Full, Symmetric, Antisymmetric, Momentum };

/// A symmetry sector of n qudits with local dimension d. k is used by Momentum only
/// (θ = 2πk/n) and is always stored reduced mod n.
struct SectorSpec {
    SectorKind kind = SectorKind::Full;
    int n = 2;
    int d = 2;
    int k = 0;

    static SectorSpec full(int n, int d);
    static SectorSpec symmetric(int n, int d);
    /// Throws SectorMissing when n > d.
    static SectorSpec antisymmetric(int n, int d);
    static SectorSpec momentum(int n, int d, int k);

    double theta() const;
    std::string label() const;

    friend auto operator<=>(const SectorSpec&, const SectorSpec&) = default;
};

/// Short CLI name: full, sym, antisym, mom.
std::string_view kind_name(SectorKind kind);
SectorKind parse_kind(std::string_view name);

/// A translation orbit of configurations.
struct OrbitClass {
    Index representative;  ///< lexicographically smallest configuration
    int period;            ///< smallest p >= 1 with rotate(c, p) = c
    double alpha;          ///< p / n², normalization of |c⟩_θ
};

/// List of (full-space index, coefficient), sorted by index.
struct SparseVector {
    std::vector<std::pair<Index, cplx>> terms;
    Index label;  ///< lexicographically smallest configuration in the support
};

struct SubspaceBasis {
    SectorSpec spec;
    std::vector<SparseVector> elements;

    Index dimension() const noexcept { return elements.size(); }
};

/// All translation orbits, sorted by representative.
std::vector<OrbitClass> enumerate_orbits(int n, int d);

SubspaceBasis momentum_basis(const SectorSpec& spec);
SubspaceBasis symmetric_basis(int n, int d);
SubspaceBasis antisymmetric_basis(int n, int d);
SubspaceBasis full_basis(int n, int d);
/// Dispatches on spec.kind.
SubspaceBasis build_basis(const SectorSpec& spec);

/// Closed-form dimension; Momentum uses the character sum over divisors of n.
Index sector_dimension(const SectorSpec& spec);

/// Exact binomial with overflow check.
Index binomial(int n, int k);

/// Dense Π = Σ |b⟩⟨b|. Refuses above `dense_cap` (d^n); use apply_projector then.
Eigen::MatrixXcd projector(const SubspaceBasis& basis, Index dense_cap = 4096);

/// Π·x without materializing Π.
std::vector<cplx> apply_projector(const SubspaceBasis& basis, std::span<const cplx> x);

/// Σ_i coordinates[i] · elements[i] as a dense d^n vector.
std::vector<cplx> expand_coordinates(const SubspaceBasis& basis, std::span<const cplx> coordinates);

} // namespace symsector
