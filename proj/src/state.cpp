#include "symsector/state.hpp"

#include "symsector/errors.hpp"
#include "symsector/kernels.hpp"
#include "symsector/sectors.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace symsector {

namespace {

constexpr double kNormTolerance = 1e-12;

void check_unit_norm(std::span<const cplx> amplitudes) {
    const double nsq = kernels::norm_sq(amplitudes);
    if (std::abs(nsq - 1.0) > kNormTolerance)
        throw InvalidArgument(fmt::format("state: squared norm {:.17g} is not 1", nsq));
}

const PureState& require_full(const PureState& state, const char* op) {
    if (!state.is_full_space())
        throw InvalidArgument(fmt::format("{}: needs a full-space state; call expanded() first", op));
    return state;
}

DensityOperator gram_to_operator(const cplx* m, std::size_t rows, std::size_t cols) {
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> out(rows, rows);
    kernels::active().gram(m, rows, cols, out.data());
    return DensityOperator(Eigen::MatrixXcd(out));
}

} // namespace

PureState::PureState(QuditGeometry geometry, std::vector<cplx> amplitudes)
    : geometry_(geometry), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != geometry_.full_dim())
        throw InvalidArgument(fmt::format("state: {} amplitudes for a {}-dimensional space", amplitudes_.size(), geometry_.full_dim()));
    check_unit_norm(amplitudes_);
}

PureState::PureState(QuditGeometry geometry, std::vector<cplx> coordinates, std::shared_ptr<const SubspaceBasis> basis)
    : geometry_(geometry), amplitudes_(std::move(coordinates)), basis_(std::move(basis)) {
    if (!basis_) throw InvalidArgument("state: sector-coordinate form needs a basis");
    if (basis_->spec.n != geometry_.n() || basis_->spec.d != geometry_.d())
        throw InvalidArgument("state: basis and geometry disagree on (n, d)");
    if (amplitudes_.size() != basis_->dimension())
        throw InvalidArgument("state: coordinate count differs from the sector dimension");
    check_unit_norm(amplitudes_);
}

PureState PureState::expanded() const {
    if (is_full_space()) return *this;
    return PureState(geometry_, expand_coordinates(*basis_, amplitudes_));
}

DensityOperator::DensityOperator(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) throw InvalidArgument("density operator: matrix must be square and non-empty");
    const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-12) throw InvalidArgument(fmt::format("density operator: not Hermitian (deviation {:.3g})", herm));
    const cplx tr = matrix_.trace();
    if (std::abs(tr - cplx{1.0, 0.0}) > 1e-10) throw InvalidArgument(fmt::format("density operator: trace {:.17g} is not 1", tr.real()));
}

double DensityOperator::purity() const {
    return kernels::norm_sq({matrix_.data(), static_cast<std::size_t>(matrix_.size())});
}

cplx inner_product(const PureState& x, const PureState& y) {
    const PureState xf = x.expanded();
    const PureState yf = y.expanded();
    if (!(xf.geometry() == yf.geometry())) throw InvalidArgument("inner_product: geometries differ");
    cplx acc{0.0, 0.0};
    const auto a = xf.amplitudes();
    const auto b = yf.amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

PureState apply_translation(const PureState& state, int k) {
    require_full(state, "apply_translation");
    if (k < 0) throw InvalidArgument("apply_translation: need k >= 0");
    const QuditGeometry& g = state.geometry();
    const int steps = k % g.n();
    const Index top = g.full_dim() / static_cast<Index>(g.d());
    const auto in = state.amplitudes();
    std::vector<cplx> out(in.size());
    for (Index i = 0; i < g.full_dim(); ++i) {
        Index j = i;
        for (int s = 0; s < steps; ++s) j = rotate_index_once(j, g.d(), top);
        out[j] = in[i];
    }
    return PureState(g, std::move(out));
}

PureState apply_site_permutation(const PureState& state, std::span<const int> perm) {
    require_full(state, "apply_site_permutation");
    const QuditGeometry& g = state.geometry();
    const auto n = static_cast<std::size_t>(g.n());
    if (perm.size() != n) throw InvalidArgument("apply_site_permutation: permutation has the wrong length");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)])
            throw InvalidArgument("apply_site_permutation: not a permutation of the sites");
        seen[static_cast<std::size_t>(p)] = true;
    }
    // weight[i] = d^(n-1-i): the place value of site i.
    std::vector<Index> weight(n);
    Index w = 1;
    for (std::size_t i = n; i-- > 0;) {
        weight[i] = w;
        w *= static_cast<Index>(g.d());
    }
    const auto in = state.amplitudes();
    std::vector<cplx> out(in.size());
    const auto d = static_cast<Index>(g.d());
    for (Index idx = 0; idx < g.full_dim(); ++idx) {
        Index rest = idx;
        Index target = 0;
        for (std::size_t i = n; i-- > 0;) {
            target += (rest % d) * weight[static_cast<std::size_t>(perm[i])];
            rest /= d;
        }
        out[target] = in[idx];
    }
    return PureState(g, std::move(out));
}

DensityOperator partial_trace(const PureState& state) {
    const PureState full = state.expanded();
    const QuditGeometry& g = full.geometry();
    return gram_to_operator(full.amplitudes().data(), g.dim_a(), g.dim_abar());
}

DensityOperator partial_trace_complement(const PureState& state) {
    const PureState full = state.expanded();
    const QuditGeometry& g = full.geometry();
    const Index rows = g.dim_a();
    const Index cols = g.dim_abar();
    const auto amp = full.amplitudes();
    std::vector<cplx> transposed(amp.size());
    for (Index a = 0; a < rows; ++a)
        for (Index v = 0; v < cols; ++v) transposed[v * rows + a] = amp[a * cols + v];
    return gram_to_operator(transposed.data(), cols, rows);
}

std::vector<double> hermitian_spectrum(const DensityOperator& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw EigenSolverError("hermitian_spectrum: eigensolver did not converge");
    const Eigen::VectorXd& ev = solver.eigenvalues();
    std::vector<double> out(static_cast<std::size_t>(ev.size()));
    for (Eigen::Index i = 0; i < ev.size(); ++i) out[static_cast<std::size_t>(i)] = std::max(ev[ev.size() - 1 - i], 0.0);
    return out;
}

} // namespace symsector
