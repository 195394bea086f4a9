#include <doctest.h>

#include "symsector/analytics.hpp"
#include "symsector/errors.hpp"
#include "symsector/oracles.hpp"

#include <cmath>
#include <numbers>

using namespace symsector;

namespace {

double max_entry(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("full sector Omega is maximally mixed") {
    const OmegaState o = omega_reduced(SectorSpec::full(6, 2), 2);
    CHECK(max_entry(o.matrix.matrix() - Eigen::MatrixXcd::Identity(4, 4) / 4.0) < 1e-15);
    CHECK(o.entropy == doctest::Approx(2 * std::log(2.0)));
    CHECK(o.rank == 4);
    CHECK(effective_dimension(SectorSpec::full(6, 2), 2) == doctest::Approx(16.0));
}

TEST_CASE("Omega matches the dense partial trace of the projector") {
    for (int n = 3; n <= 6; ++n) {
        for (int k = 0; k < n; ++k) {
            const SectorSpec spec = SectorSpec::momentum(n, 2, k);
            const Eigen::MatrixXcd p = oracle::momentum_projector(n, 2, k);
            for (int na = 1; na < n; ++na) {
                CAPTURE(spec.label());
                CAPTURE(na);
                CHECK(max_entry(omega_reduced(spec, na).matrix.matrix() - oracle::reduced_normalized(p, n, 2, na)) < 1e-12);
            }
        }
    }
}

TEST_CASE("symmetric Omega is the normalized symmetric projector on A") {
    for (int na = 1; na < 6; ++na) {
        const Eigen::MatrixXcd p = oracle::permutation_projector(na, 2, 1);
        CHECK(max_entry(omega_reduced(SectorSpec::symmetric(6, 2), na).matrix.matrix() - p / p.trace().real()) < 1e-10);
    }
    CHECK(effective_dimension(SectorSpec::symmetric(10, 2), 5) == doctest::Approx(6.0));
}

TEST_CASE("omega_complement matches the oracle on the trailing sites") {
    const SectorSpec spec = SectorSpec::momentum(5, 2, 2);
    const SubspaceBasis basis = build_basis(spec);
    const OmegaState c = omega_complement(basis, 2);
    const Eigen::MatrixXcd p = oracle::momentum_projector(5, 2, 2);
    // Tracing the leading two sites: build it directly.
    Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(8, 8);
    for (int a = 0; a < 4; ++a)
        for (int u = 0; u < 8; ++u)
            for (int v = 0; v < 8; ++v) want(u, v) += p(a * 8 + u, a * 8 + v);
    want /= p.trace().real();
    CHECK(max_entry(c.matrix.matrix() - want) < 1e-12);
    CHECK(effective_dimension(basis, 2) == doctest::Approx(1.0 / (want * want).trace().real()));
}

TEST_CASE("momentum sector worked example at n=5") {
    const OmegaState o = omega_reduced(SectorSpec::momentum(5, 2, 0), 2);
    const auto& m = o.matrix.matrix();
    CHECK(m(0, 0).real() == doctest::Approx(0.3));
    CHECK(m(1, 1).real() == doctest::Approx(0.2));
    CHECK(m(2, 2).real() == doctest::Approx(0.2));
    CHECK(m(3, 3).real() == doctest::Approx(0.3));
    CHECK(std::abs(m(1, 2) - 0.1) < 1e-15);
    CHECK(o.purity == doctest::Approx(0.28));
    CHECK(momentum_diagonal(5, 2, 2, 0, 0b00) == doctest::Approx(0.3));
    CHECK(momentum_diagonal(5, 2, 2, 0, 0b01) == doctest::Approx(0.2));
    CHECK(purity_upper_bound(5, 2, 2, 0) == doctest::Approx(0.29125));
    CHECK(offdiagonal_bound(8) == doctest::Approx(0.125));
    CHECK(offdiagonal_bound(1) == 1.0);

    const SbarMomentum sb = sbar_momentum(5, 2, 2, 0);
    CHECK(sb.exact == doctest::Approx(-std::log(0.29125)));
    CHECK(sb.exact == doctest::Approx(1.2336).epsilon(1e-4));
    CHECK(sb.exact <= o.entropy);
    CHECK(-std::log(o.purity) <= o.entropy + 1e-12);
}

TEST_CASE("m_theta reproduces the prime-n dimension identity") {
    for (int n : {3, 5, 7, 11})
        for (int d : {2, 3})
            for (int k = 0; k < n; ++k) {
                const double lhs = double(n) * double(sector_dimension(SectorSpec::momentum(n, d, k)));
                CHECK(lhs == doctest::Approx(std::pow(double(d), n) + m_theta(n, k) * d));
            }
    CHECK(m_theta(5, 0) == 4);
    CHECK(m_theta(5, 3) == -1);
}

TEST_CASE("momentum diagonal, off-diagonal and block structure for primes") {
    for (int n : {3, 5, 7}) {
        for (int k = 0; k < n; ++k) {
            const SubspaceBasis basis = build_basis(SectorSpec::momentum(n, 2, k));
            for (int na = 1; na < n; ++na) {
                const OmegaState o = omega_reduced(basis, na);
                const auto& m = o.matrix.matrix();
                for (Eigen::Index a = 0; a < m.rows(); ++a) {
                    CHECK(std::abs(m(a, a).real() - momentum_diagonal(n, 2, na, k, Index(a))) < 1e-12);
                    for (Eigen::Index b = 0; b < m.rows(); ++b)
                        if (a != b) CHECK(std::abs(m(a, b)) <= offdiagonal_bound(basis.dimension()) + 1e-12);
                }
                if (n >= 5) CHECK(o.purity <= purity_upper_bound(n, 2, na, k) + 1e-12);
            }
        }
    }
}

TEST_CASE("prime-only formulas refuse composite n") {
    CHECK_THROWS_AS(momentum_diagonal(4, 2, 2, 0, 0), RegimeError);
    CHECK_THROWS_AS(purity_upper_bound(10, 2, 5, 0), RegimeError);
    CHECK_THROWS_AS(momentum_lower_bound(10, 2, 5, 0, 0.1), RegimeError);
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
}

TEST_CASE("gamma_sum and multinomial") {
    CHECK(gamma_sum(1, 2) == 0);
    CHECK(gamma_sum(1, 5) == 0);
    CHECK(gamma_sum(2, 2) == 2);
    CHECK(gamma_sum(3, 2) == 12);
    CHECK(multinomial(std::vector{2, 1, 1}) == 12);
    CHECK_THROWS_AS(gamma_sum(40, 2), std::overflow_error);
}

TEST_CASE("eta0, Fannes-Audenaert and concentration") {
    CHECK(eta0(0.0) == 0.0);
    CHECK(eta0(0.1) == doctest::Approx(0.2303).epsilon(1e-3));
    CHECK(eta0(0.5) == doctest::Approx(1.0 / std::numbers::e));
    double prev = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double v = eta0(i / 1000.0);
        CHECK(v >= prev);
        prev = v;
    }
    CHECK(fannes_audenaert_bound(0.0, 2.0) == 0.0);
    CHECK(fannes_audenaert_bound(2.0, 2.0) == doctest::Approx(2 * std::log(2.0) + 1 / std::numbers::e));
    CHECK(fannes_audenaert_bound(0.3, 4.0) < fannes_audenaert_bound(0.4, 4.0));

    CHECK(concentration_probability(1024, 1.0) == doctest::Approx(std::exp(-1024.0 / (18 * std::pow(std::numbers::pi, 3)))));
    CHECK(concentration_probability(1024, 1.0) == doctest::Approx(0.1596).epsilon(1e-3));
    CHECK(concentration_probability(2048, 0.7) == doctest::Approx(std::pow(concentration_probability(1024, 0.7), 2)));
    CHECK(concentration_probability(100, 1e-6) == doctest::Approx(1.0));
}

TEST_CASE("concentration intervals") {
    const Interval full = concentration_interval(SectorSpec::full(8, 2), 4, 0.1);
    CHECK(full.center == doctest::Approx(4 * std::log(2.0)));
    const Interval sym = concentration_interval(SectorSpec::symmetric(10, 2), 5, 0.1);
    CHECK(sym.center == doctest::Approx(std::log(6.0)));
    const Interval mom = concentration_interval(SectorSpec::momentum(5, 2, 0), 2, 0.1);
    CHECK(mom.center == doctest::Approx(omega_reduced(SectorSpec::momentum(5, 2, 0), 2).entropy));
}

TEST_CASE("permutation-sector closed-form intervals") {
    const Interval balanced = permutation_interval(10, 2, 5, 0.1, 1);
    CHECK(balanced.eps_prime == doctest::Approx(1.1));
    CHECK(balanced.non_informative);
    const Interval lopsided = permutation_interval(100, 2, 5, 0.1, 1);
    CHECK(lopsided.eps_prime == doctest::Approx(0.1 + std::sqrt(6.0 / 96.0)));
    const Interval fermions = permutation_interval(50, 100, 5, 0.1, -1);
    CHECK(fermions.center == doctest::Approx(std::log(75287520.0)));
}

TEST_CASE("momentum lower bound") {
    const MomentumLowerBound b = momentum_lower_bound(5, 2, 2, 0, 0.1);
    CHECK(b.eps_prime_exact);
    CHECK(b.lower_bound <= 2 * std::log(2.0));
    // ε'(L - ln ε') grows with ε' only while ε' < e^{L-1} = d^{n_A}/e.
    double prev = b.lower_bound;
    for (double eps = 0.15; eps < 3.0; eps += 0.05) {
        const MomentumLowerBound cur = momentum_lower_bound(5, 2, 2, 0, eps);
        if (cur.eps_prime >= 4.0 / std::numbers::e) break;
        CHECK(cur.lower_bound <= prev);
        prev = cur.lower_bound;
    }
    CHECK(momentum_lower_bound(5, 2, 2, 0, 0.5).non_informative);
    CHECK_FALSE(momentum_lower_bound(31, 2, 5, 0, 0.1).eps_prime_exact);
}

TEST_CASE("Page quantities") {
    CHECK(page_lower_bound(10, 2, 5) == doctest::Approx(5 * std::log(2.0) - 0.5));
    CHECK(page_lower_bound(10, 2, 0) < 0.0);
    CHECK(page_lower_bound(10, 2, 3) < 3 * std::log(2.0));
    CHECK_THROWS(page_lower_bound(10, 2, 6));
    CHECK(page_mean_entropy(10, 2, 5) == doctest::Approx(2.96631).epsilon(1e-5));
    CHECK(32 * haar_mean_purity(10, 2, 5) == doctest::Approx(32.0 * 64.0 / 1025.0));
}

TEST_CASE("OmegaCache returns one shared result per key") {
    OmegaCache cache;
    const auto a = cache.get(SectorSpec::momentum(5, 2, 1), 2);
    const auto b = cache.get(SectorSpec::momentum(5, 2, 1), 2);
    CHECK(a.get() == b.get());
    CHECK(cache.get(SectorSpec::momentum(5, 2, 1), 3).get() != a.get());
}
