#include "symsector/harness.hpp"

#include "symsector/analytics.hpp"
#include "symsector/errors.hpp"
#include "symsector/kernels.hpp"
#include "symsector/oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include <fmt/format.h>

namespace symsector {

namespace {

Eigen::VectorXcd dense(const SparseVector& v, Index dim) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    for (const auto& [idx, c] : v.terms) out(static_cast<Eigen::Index>(idx)) = c;
    return out;
}

Eigen::MatrixXcd dense_columns(const SubspaceBasis& basis) {
    const Index dim = checked_pow(basis.spec.d, basis.spec.n);
    Eigen::MatrixXcd out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(basis.dimension()));
    for (Index i = 0; i < basis.dimension(); ++i) out.col(static_cast<Eigen::Index>(i)) = dense(basis.elements[i], dim);
    return out;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Digit counts of an n_a-site string; two strings share a block iff these agree.
std::vector<int> occupation(Index idx, int n_a, int d) {
    std::vector<int> counts(d, 0);
    for (int i = 0; i < n_a; ++i, idx /= d) ++counts[idx % d];
    return counts;
}

class Recorder {
public:
    void add(std::string name, double deviation, double tolerance, std::string detail = {}) {
        report_.checks.push_back({std::move(name), deviation <= tolerance, deviation, tolerance, std::move(detail)});
    }
    void flag(std::string name, bool pass, std::string detail) {
        report_.checks.push_back({std::move(name), pass, pass ? 0.0 : 1.0, 0.0, std::move(detail)});
    }
    VerificationReport take() { return std::move(report_); }

private:
    VerificationReport report_;
};

void check_n4_momentum_table(Recorder& rec) {
    constexpr int n = 4, d = 2;
    const Eigen::MatrixXcd t = oracle::translation_matrix(n, d);
    const std::array<Index, 4> expected_dims{6, 3, 4, 3};
    // Labels read as strings with site 1 leftmost.
    const std::array<std::vector<const char*>, 4> labels{{
        {"0000", "1000", "1100", "1010", "1110", "1111"},
        {"1000", "1100", "1110"},
        {"1000", "1100", "1010", "1110"},
        {"1000", "1100", "1110"},
    }};
    auto unnormalized = [&](const char* label, int k) {
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(16);
        c(std::stoi(label, nullptr, 2)) = 1.0;
        Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(16);
        const double theta = 2.0 * std::numbers::pi * k / n;
        for (int j = 0; j < n; ++j, c = t * c) sum += std::polar(1.0, -theta * j) * c;
        return sum;
    };

    std::vector<long long> dims;
    for (int k = 0; k < n; ++k) {
        const SubspaceBasis basis = momentum_basis(SectorSpec::momentum(n, d, k));
        dims.push_back(static_cast<long long>(basis.dimension()));
        rec.add(fmt::format("n4_momentum_dimension_k{}", k),
                std::abs(double(basis.dimension()) - double(expected_dims[k])), 0.0,
                fmt::format("got {}, expected {}", basis.dimension(), expected_dims[k]));

        // Every listed element must appear in the basis up to a global phase, one to one.
        const Eigen::MatrixXcd ours = dense_columns(basis);
        std::vector<bool> used(basis.dimension(), false);
        double worst = labels[k].size() == basis.dimension() ? 0.0 : 1.0;
        for (const char* label : labels[k]) {
            const Eigen::VectorXcd v = unnormalized(label, k).normalized();
            double best = 1.0;
            Eigen::Index best_col = -1;
            for (Eigen::Index col = 0; col < ours.cols(); ++col) {
                const double gap = 1.0 - std::abs(ours.col(col).dot(v));
                if (!used[col] && gap < best) best = gap, best_col = col;
            }
            if (best_col >= 0) used[best_col] = true;
            worst = std::max(worst, best);
        }
        rec.add(fmt::format("n4_momentum_basis_k{}", k), worst, 1e-12, "max 1 - |<expected|ours>| over the listed elements");
    }
    for (int k : {1, 3}) {
        const double norm = unnormalized("1010", k).norm();
        bool excluded = true;
        for (const SparseVector& v : momentum_basis(SectorSpec::momentum(n, d, k)).elements)
            for (const auto& [idx, c] : v.terms)
                if (idx == 0b1010 || idx == 0b0101) excluded = false;
        rec.add(fmt::format("n4_momentum_1010_excluded_k{}", k), excluded ? norm : 1.0, 1e-12,
                fmt::format("group average norm {:.3g}, excluded={}", norm, excluded));
    }
}

std::vector<SectorSpec> small_sectors(int n, int d) {
    std::vector<SectorSpec> out{SectorSpec::full(n, d), SectorSpec::symmetric(n, d)};
    if (n <= d) out.push_back(SectorSpec::antisymmetric(n, d));
    for (int k = 0; k < n; ++k) out.push_back(SectorSpec::momentum(n, d, k));
    return out;
}

void check_dimensions_and_bases(Recorder& rec, int max_n, int max_d) {
    double worst_dim = 0.0, worst_sum = 0.0, worst_ortho = 0.0, worst_eigen = 0.0;
    int cases = 0;
    std::string first_failure;
    for (int d = 2; d <= max_d; ++d) {
        for (int n = 1; n <= max_n; ++n) {
            if (std::pow(double(d), n) > 256.0) break;
            Index mom_total = 0;
            for (const SectorSpec& spec : small_sectors(n, d)) {
                const SubspaceBasis basis = build_basis(spec);
                const Index closed = sector_dimension(spec);
                const int brute = oracle::eigenspace_dimension(spec);
                const double dev = std::max(std::abs(double(closed) - brute), std::abs(double(basis.dimension()) - brute));
                if (dev > 0 && first_failure.empty())
                    first_failure = fmt::format("{}: closed {} basis {} oracle {}", spec.label(), closed, basis.dimension(), brute);
                worst_dim = std::max(worst_dim, dev);
                if (spec.kind == SectorKind::Momentum) mom_total += closed;
                ++cases;

                const Eigen::MatrixXcd b = dense_columns(basis);
                const auto dim = b.cols();
                worst_ortho = std::max(worst_ortho, max_abs(b.adjoint() * b - Eigen::MatrixXcd::Identity(dim, dim)));
                // Each element is fixed by the group-average projector.
                if (spec.kind == SectorKind::Momentum) {
                    worst_eigen = std::max(worst_eigen, max_abs(oracle::momentum_projector(n, d, spec.k) * b - b));
                } else if (spec.kind != SectorKind::Full) {
                    const double sign = spec.kind == SectorKind::Symmetric ? 1.0 : -1.0;
                    std::vector<int> swap01(n);
                    std::iota(swap01.begin(), swap01.end(), 0);
                    if (n >= 2) std::swap(swap01[0], swap01[1]);
                    std::vector<int> cycle(n);
                    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
                    const double cycle_sign = spec.kind == SectorKind::Symmetric || n % 2 == 1 ? 1.0 : -1.0;
                    if (n >= 2)
                        worst_eigen = std::max(worst_eigen, max_abs(oracle::site_permutation_matrix(n, d, swap01) * b - sign * b));
                    worst_eigen = std::max(worst_eigen, max_abs(oracle::site_permutation_matrix(n, d, cycle) * b - cycle_sign * b));
                }
            }
            worst_sum = std::max(worst_sum, std::abs(double(mom_total) - std::pow(double(d), n)));
        }
    }
    rec.add("dimension_oracle", worst_dim, 0.0, first_failure.empty() ? fmt::format("{} sectors", cases) : first_failure);
    rec.add("momentum_dimensions_sum", worst_sum, 0.0);
    rec.add("basis_orthonormal", worst_ortho, 1e-12);
    rec.add("basis_eigen_equations", worst_eigen, 1e-12);
}

void check_permutation_omega(Recorder& rec) {
    struct Case {
        int n, d;
        SectorKind kind;
    };
    std::vector<Case> cases;
    for (int n : {4, 6, 8}) cases.push_back({n, 2, SectorKind::Symmetric});
    cases.push_back({3, 4, SectorKind::Symmetric});
    cases.push_back({3, 4, SectorKind::Antisymmetric});
    for (const Case& c : cases) {
        const SectorSpec spec = c.kind == SectorKind::Symmetric ? SectorSpec::symmetric(c.n, c.d) : SectorSpec::antisymmetric(c.n, c.d);
        const SubspaceBasis basis = build_basis(spec);
        double worst = 0.0;
        for (int na = 1; na < c.n; ++na) {
            const Eigen::MatrixXcd expected = [&] {
                const Eigen::MatrixXcd p = oracle::permutation_projector(na, c.d, c.kind == SectorKind::Symmetric ? 1 : -1);
                return Eigen::MatrixXcd(p / p.trace().real());
            }();
            worst = std::max(worst, max_abs(omega_reduced(basis, na).matrix.matrix() - expected));
        }
        rec.add(fmt::format("omega_permutation_closed_form_{}", spec.label()), worst, 1e-10);
    }
}

void check_momentum_omega(Recorder& rec) {
    constexpr int d = 2;
    for (int n : {3, 5, 7}) {
        double diag = 0.0, offdiag_excess = 0.0, cross = 0.0, brute = 0.0, upper_excess = -1.0;
        for (int k = 0; k < n; ++k) {
            const SectorSpec spec = SectorSpec::momentum(n, d, k);
            const SubspaceBasis basis = build_basis(spec);
            const Eigen::MatrixXcd projector = oracle::momentum_projector(n, d, k);
            for (int na = 1; na < n; ++na) {
                const OmegaState omega = omega_reduced(basis, na);
                const Eigen::MatrixXcd& m = omega.matrix.matrix();
                brute = std::max(brute, max_abs(m - oracle::reduced_normalized(projector, n, d, na)));
                for (Eigen::Index a = 0; a < m.rows(); ++a) {
                    diag = std::max(diag, std::abs(m(a, a).real() - momentum_diagonal(n, d, na, k, static_cast<Index>(a))));
                    for (Eigen::Index b = 0; b < m.cols(); ++b) {
                        if (a == b) continue;
                        offdiag_excess = std::max(offdiag_excess, std::abs(m(a, b)) - offdiagonal_bound(basis.dimension()));
                        if (occupation(a, na, d) != occupation(b, na, d)) cross = std::max(cross, std::abs(m(a, b)));
                    }
                }
                if (n >= 5) upper_excess = std::max(upper_excess, omega.purity - purity_upper_bound(n, d, na, k));
            }
        }
        rec.add(fmt::format("momentum_omega_brute_force_n{}", n), brute, 1e-12);
        rec.add(fmt::format("momentum_diagonal_formula_n{}", n), diag, 1e-12);
        rec.add(fmt::format("momentum_offdiagonal_bound_n{}", n), std::max(0.0, offdiag_excess), 1e-12);
        rec.add(fmt::format("momentum_block_structure_n{}", n), cross, 1e-12);
        if (n >= 5)
            rec.add(fmt::format("momentum_purity_upper_bound_n{}", n), std::max(0.0, upper_excess), 1e-12,
                    fmt::format("max purity - bound = {:.3g}", upper_excess));
    }

    // n=5, n_A=2, k=0 worked example.
    const OmegaState omega = omega_reduced(SectorSpec::momentum(5, 2, 0), 2);
    const Eigen::MatrixXcd& m = omega.matrix.matrix();
    const std::array<double, 4> diag{0.3, 0.2, 0.2, 0.3};
    double dev = 0.0;
    for (int a = 0; a < 4; ++a) dev = std::max(dev, std::abs(m(a, a) - diag[a]));
    rec.add("momentum_n5_diagonal", dev, 1e-12);
    rec.add("momentum_n5_offdiagonal_01_10", std::abs(m(1, 2) - 0.1), 1e-12);
    rec.add("momentum_n5_purity", std::abs(omega.purity - 0.28), 1e-12);
    rec.add("momentum_n5_upper_bound", std::abs(purity_upper_bound(5, 2, 2, 0) - 0.29125), 1e-12);
}

void check_scalars(Recorder& rec) {
    double drop = 0.0;
    double prev = eta0(0.0);
    for (int i = 1; i <= 1000; ++i) {
        const double cur = eta0(i / 1000.0);
        drop = std::max(drop, prev - cur);
        prev = cur;
    }
    rec.add("eta0_non_decreasing", drop, 0.0);
    rec.add("gamma_sum_na2", std::abs(double(gamma_sum(2, 2)) - 2.0), 0.0);
    rec.add("gamma_sum_na3", std::abs(double(gamma_sum(3, 2)) - 12.0), 0.0);
    rec.add("page_lower_bound_n10", std::abs(page_lower_bound(10, 2, 5) - (5 * std::numbers::ln2 - 0.5)), 1e-12);
}

void check_kernels(Recorder& rec) {
    std::mt19937_64 gen(12345);
    std::normal_distribution<double> normal;
    const std::size_t rows = 32, cols = 37;
    std::vector<cplx> m(rows * cols);
    for (cplx& x : m) x = {normal(gen), normal(gen)};
    const kernels::KernelTable& ref = kernels::scalar_table();
    std::vector<cplx> ref_gram(rows * rows), gram(rows * rows);
    ref.gram(m.data(), rows, cols, ref_gram.data());
    const double ref_norm = ref.norm_sq(m.data(), m.size());
    for (kernels::Isa isa : kernels::available()) {
        const kernels::KernelTable& t = kernels::table(isa);
        t.gram(m.data(), rows, cols, gram.data());
        double dev = std::abs(t.norm_sq(m.data(), m.size()) - ref_norm) / ref_norm;
        for (std::size_t i = 0; i < gram.size(); ++i) dev = std::max(dev, std::abs(gram[i] - ref_gram[i]) / ref_norm);
        std::vector<cplx> a = m, b = m;
        ref.scale(a.data(), a.size(), 0.37);
        t.scale(b.data(), b.size(), 0.37);
        for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] - b[i]));
        rec.add(fmt::format("kernel_equivalence_{}", kernels::isa_name(isa)), dev, 1e-13);
    }
}

} // namespace

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

VerificationReport run_verification(int max_n, int max_d) {
    if (max_n < 1 || max_d < 2) throw ConfigError("verify: need --n >= 1 and --d >= 2");
    Recorder rec;
    auto guard = [&](const char* name, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            rec.flag(name, false, fmt::format("threw: {}", e.what()));
        }
    };
    guard("n4_momentum_table", [&] { check_n4_momentum_table(rec); });
    guard("dimension_oracle", [&] { check_dimensions_and_bases(rec, max_n, max_d); });
    guard("omega_permutation_closed_form", [&] { check_permutation_omega(rec); });
    guard("momentum_omega", [&] { check_momentum_omega(rec); });
    guard("scalars", [&] { check_scalars(rec); });
    guard("kernels", [&] { check_kernels(rec); });
    return rec.take();
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const Check& c : report.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"deviation", c.deviation}, {"tolerance", c.tolerance}, {"detail", c.detail}});
    return {{"all_pass", report.all_pass()}, {"checks", checks}};
}

} // namespace symsector
