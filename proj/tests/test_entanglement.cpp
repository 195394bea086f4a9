#include <doctest.h>

#include "helpers.hpp"
#include "symsector/entanglement.hpp"
#include "symsector/errors.hpp"
#include "symsector/sampling.hpp"
#include "symsector/sectors.hpp"

#include <cmath>

using namespace symsector;

TEST_CASE("renyi_entropy on flat and pure spectra") {
    const std::vector<double> flat(8, 1.0 / 8);
    for (double q : {0.0, 0.5, 1.0, 2.0, 3.0, kInfiniteOrder}) CHECK(renyi_entropy(flat, q) == doctest::Approx(std::log(8.0)));
    const std::vector<double> pure{1.0, 0.0, 0.0};
    for (double q : {0.0, 0.5, 1.0, 2.0, kInfiniteOrder}) CHECK(std::abs(renyi_entropy(pure, q)) < 1e-15);
}

TEST_CASE("renyi_entropy of diag(0.7, 0.3)") {
    const std::vector<double> p{0.7, 0.3};
    CHECK(renyi_entropy(p, 2.0) == doctest::Approx(-std::log(0.58)));
    CHECK(renyi_entropy(p, 2.0) == doctest::Approx(0.5447).epsilon(1e-4));
    CHECK(renyi_entropy(p, 1.0) == doctest::Approx(-(0.7 * std::log(0.7) + 0.3 * std::log(0.3))));
    CHECK(renyi_entropy(p, kInfiniteOrder) == doctest::Approx(-std::log(0.7)));
    // Non-increasing in q.
    double prev = renyi_entropy(p, 0.0);
    for (double q = 0.25; q < 10; q += 0.25) {
        const double cur = renyi_entropy(p, q);
        CHECK(cur <= prev + 1e-14);
        prev = cur;
    }
    CHECK_THROWS_AS(renyi_entropy(p, -1.0), InvalidArgument);
}

TEST_CASE("rescaled_s") {
    CHECK(rescaled_s(5 * std::log(2.0), 2.0, 5, 2) == doctest::Approx(1.0));
    CHECK(rescaled_s(0.0, 2.0, 5, 2) == doctest::Approx(32.0));
    CHECK(rescaled_s(std::log(16.0), 2.0, 5, 2) == doctest::Approx(2.0));
    CHECK_THROWS_AS(rescaled_s(1.0, 1.0, 5, 2), InvalidArgument);
}

TEST_CASE("measure_entanglement on a Bell pair") {
    const QuditGeometry g(2, 2, 1);
    const auto rec = measure_entanglement(testing::superposition(g, {{0, 1.0}, {3, 1.0}}), 2.0);
    CHECK(rec.e1 == doctest::Approx(std::log(2.0)));
    CHECK(rec.eq == doctest::Approx(std::log(2.0)));
    CHECK(rec.s == doctest::Approx(1.0));
    REQUIRE(rec.spectrum_head.size() == 4);
    CHECK(rec.spectrum_head[0] == doctest::Approx(0.5));
    CHECK(rec.spectrum_head[2] == 0.0);  // padded past the reduced dimension

    const auto vn = measure_entanglement(testing::basis_state(g, 1), 1.0);
    CHECK(std::isnan(vn.s));
    CHECK(std::abs(vn.e1) < 1e-15);
}

TEST_CASE("s equals d^{n_A} times the purity for random states") {
    const QuditGeometry g(8, 2, 4);
    const auto basis = std::make_shared<const SubspaceBasis>(full_basis(8, 2));
    for (std::uint64_t i = 0; i < 10; ++i) {
        const PureState st = sample_sector_state(basis, g, {4, i});
        const auto rec = measure_entanglement(st, 2.0);
        CHECK(rec.s == doctest::Approx(16.0 * partial_trace(st).purity()).epsilon(1e-12));
        CHECK(rec.e1 >= rec.eq);
        CHECK(rec.e1 <= 4 * std::log(2.0) + 1e-12);
    }
}
