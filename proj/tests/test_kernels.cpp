#include <doctest.h>

#include "symsector/kernels.hpp"

#include <random>
#include <vector>

using namespace symsector;

namespace {

std::vector<cplx> random_block(std::size_t len, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal;
    std::vector<cplx> v(len);
    for (cplx& x : v) x = {normal(gen), normal(gen)};
    return v;
}

} // namespace

TEST_CASE("scalar kernels on small inputs") {
    const auto& t = kernels::scalar_table();
    const std::vector<cplx> x{{3, 4}, {0, 1}};
    CHECK(t.norm_sq(x.data(), x.size()) == doctest::Approx(26.0));
    CHECK(t.norm_sq(x.data(), 0) == 0.0);

    // rows (1, i) and (i, 1): gram = [[2, 2i·(-i)...]]
    const std::vector<cplx> m{{1, 0}, {0, 1}, {0, 1}, {1, 0}};
    std::vector<cplx> g(4);
    t.gram(m.data(), 2, 2, g.data());
    CHECK(std::abs(g[0] - cplx(2, 0)) < 1e-15);
    CHECK(std::abs(g[1] - cplx(0, 0)) < 1e-15);
    CHECK(std::abs(g[3] - cplx(2, 0)) < 1e-15);
}

TEST_CASE("every available variant matches the scalar reference") {
    const auto& ref = kernels::scalar_table();
    CHECK(kernels::available().front() == kernels::Isa::Scalar);
    // Odd sizes exercise the remainder loops.
    for (std::size_t rows : {1u, 3u, 8u, 32u}) {
        for (std::size_t cols : {1u, 2u, 5u, 33u}) {
            const auto m = random_block(rows * cols, rows * 131 + cols);
            std::vector<cplx> want(rows * rows), got(rows * rows);
            ref.gram(m.data(), rows, cols, want.data());
            const double scale = ref.norm_sq(m.data(), m.size());
            for (kernels::Isa isa : kernels::available()) {
                CAPTURE(kernels::isa_name(isa));
                CAPTURE(rows);
                CAPTURE(cols);
                const auto& t = kernels::table(isa);
                t.gram(m.data(), rows, cols, got.data());
                for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= 1e-14 * scale);
                CHECK(t.norm_sq(m.data(), m.size()) == doctest::Approx(scale).epsilon(1e-14));
                auto a = m, b = m;
                ref.scale(a.data(), a.size(), -1.75);
                t.scale(b.data(), b.size(), -1.75);
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("gram output is Hermitian") {
    const auto m = random_block(16 * 9, 7);
    std::vector<cplx> g(16 * 16);
    kernels::active().gram(m.data(), 16, 9, g.data());
    for (std::size_t a = 0; a < 16; ++a)
        for (std::size_t b = 0; b < 16; ++b) CHECK(std::abs(g[a * 16 + b] - std::conj(g[b * 16 + a])) < 1e-13);
}

TEST_CASE("requesting a variant the binary lacks throws") {
#if !defined(SYMSECTOR_HAVE_NEON)
    CHECK_THROWS(kernels::table(kernels::Isa::Neon));
#endif
    CHECK(kernels::isa_name(kernels::Isa::Scalar) == "scalar");
}
