#include <doctest.h>

#include "symsector/analytics.hpp"
#include "symsector/sampling.hpp"
#include "symsector/sectors.hpp"

#include <Eigen/Dense>

#include <cmath>

using namespace symsector;

TEST_CASE("streams depend only on (seed, index, attempt)") {
    auto a = make_stream({1, 2});
    auto b = make_stream({1, 2});
    auto c = make_stream({1, 3});
    auto r = make_stream({1, 2}, 1);
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
    CHECK(x != r());
    CHECK(make_stream({2, 1})() != make_stream({1, 2})());
}

TEST_CASE("Box-Muller draws look standard normal") {
    auto gen = make_stream({42, 0});
    double sum = 0, sum2 = 0;
    const int pairs = 100000;
    for (int i = 0; i < pairs; ++i) {
        const auto [u, v] = standard_normal_pair(gen);
        sum += u + v;
        sum2 += u * u + v * v;
    }
    const double n = 2.0 * pairs;
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(std::abs(sum2 / n - 1.0) < 0.02);
}

TEST_CASE("one-dimensional sector returns the singlet") {
    const auto basis = std::make_shared<const SubspaceBasis>(antisymmetric_basis(2, 2));
    const PureState s = sample_sector_state(basis, QuditGeometry(2, 2, 1), {5, 0});
    const auto a = s.amplitudes();
    CHECK(std::abs(std::abs(a[0b01]) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(a[0b01] + a[0b10]) < 1e-12);
    CHECK(std::abs(a[0b00]) == 0.0);
}

TEST_CASE("draws are normalized and reproducible") {
    const auto basis = std::make_shared<const SubspaceBasis>(build_basis(SectorSpec::momentum(7, 2, 1)));
    const QuditGeometry g(7, 2, 3);
    for (std::uint64_t i = 0; i < 50; ++i) {
        const PureState s = sample_sector_state(basis, g, {8, i});
        double norm = 0.0;
        for (cplx c : s.amplitudes()) norm += std::norm(c);
        CHECK(std::abs(norm - 1.0) < 1e-12);
        const PureState t = sample_sector_state(basis, g, {8, i});
        CHECK(std::equal(s.amplitudes().begin(), s.amplitudes().end(), t.amplitudes().begin()));
    }
}

TEST_CASE("coordinates are isotropic: E[c c^dagger] = I/D") {
    const auto basis = std::make_shared<const SubspaceBasis>(build_basis(SectorSpec::momentum(4, 2, 0)));
    REQUIRE(basis->dimension() == 6);
    const QuditGeometry g(4, 2, 2);
    Eigen::MatrixXcd cov = Eigen::MatrixXcd::Zero(6, 6);
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
        const PureState s = sample_sector_state(basis, g, {77, static_cast<std::uint64_t>(i)}, StateForm::SectorCoordinates);
        const Eigen::Map<const Eigen::VectorXcd> c(s.amplitudes().data(), 6);
        cov += c * c.adjoint();
    }
    cov /= double(draws);
    CHECK((cov - Eigen::MatrixXcd::Identity(6, 6) / 6.0).cwiseAbs().maxCoeff() < 0.01);
}

TEST_CASE("sample mean purity matches the exact subspace average") {
    // For Haar vectors in a subspace of dimension D,
    // E tr ρ_A² = D (tr Ω_A² + tr Ω_Ā²) / (D + 1).
    const SectorSpec spec = SectorSpec::momentum(8, 2, 3);
    const auto basis = std::make_shared<const SubspaceBasis>(build_basis(spec));
    const double dim = static_cast<double>(basis->dimension());
    const double exact = dim * (omega_reduced(*basis, 4).purity + 1.0 / effective_dimension(*basis, 4)) / (dim + 1.0);

    const QuditGeometry g(8, 2, 4);
    const int draws = 20000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < draws; ++i) {
        const double p = partial_trace(sample_sector_state(basis, g, {13, static_cast<std::uint64_t>(i)})).purity();
        sum += p;
        sum2 += p * p;
    }
    const double mean = sum / draws;
    const double sem = std::sqrt((sum2 / draws - mean * mean) / draws);
    CHECK(std::abs(mean - exact) < 4.0 * sem);
}
