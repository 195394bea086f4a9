#include <doctest.h>

#include "symsector/errors.hpp"
#include "symsector/geometry.hpp"
#include "symsector/sectors.hpp"

#include <cstdlib>
#include <vector>

using namespace symsector;

TEST_CASE("encode_index is big-endian with site 1 most significant") {
    CHECK(encode_index(std::vector{0, 0, 0, 0}, 2) == 0);
    CHECK(encode_index(std::vector{1, 0, 1, 0}, 2) == 10);
    CHECK(encode_index(std::vector{2, 1}, 3) == 7);
    CHECK_THROWS_AS(encode_index(std::vector{0, 2}, 2), InvalidArgument);
}

TEST_CASE("decode_index inverts encode_index") {
    for (int d : {2, 3, 5})
        for (Index idx = 0; idx < checked_pow(d, 4); ++idx) CHECK(encode_index(decode_index(idx, 4, d), d) == idx);
}

TEST_CASE("rotate_string shifts right by k") {
    CHECK(rotate_string(std::vector{1, 0, 0, 0}, 1) == Digits{0, 1, 0, 0});
    CHECK(rotate_string(std::vector{1, 0, 1, 0}, 2) == Digits{1, 0, 1, 0});
    const Digits c{2, 0, 1, 1, 0};
    CHECK(rotate_string(c, 5) == c);
    CHECK(rotate_string(c, 7) == rotate_string(c, 2));
    CHECK_THROWS_AS(rotate_string(c, -1), InvalidArgument);
}

TEST_CASE("rotate_index_once agrees with rotate_string") {
    const int n = 5, d = 3;
    const Index top = checked_pow(d, n - 1);
    for (Index idx = 0; idx < checked_pow(d, n); ++idx)
        CHECK(rotate_index_once(idx, d, top) == encode_index(rotate_string(decode_index(idx, n, d), 1), d));
}

TEST_CASE("QuditGeometry validates the cut") {
    const QuditGeometry g(10, 2, 5);
    CHECK(g.full_dim() == 1024);
    CHECK(g.dim_a() == 32);
    CHECK(g.dim_abar() == 32);
    CHECK(g.n_abar() == 5);
    CHECK_THROWS_AS(QuditGeometry(4, 2, 4), InvalidArgument);
    CHECK_THROWS_AS(QuditGeometry(4, 1, 2), InvalidArgument);
}

TEST_CASE("size cap honours SYMSECTOR_SIZE_CAP") {
    CHECK_NOTHROW(require_within_cap(Index{1} << 24, "test"));
    CHECK_THROWS_AS(require_within_cap((Index{1} << 24) + 1, "test"), SizeCapExceeded);
    ::setenv("SYMSECTOR_SIZE_CAP", "64", 1);
    CHECK(size_cap() == 64);
    CHECK_THROWS_AS(full_basis(7, 2), SizeCapExceeded);
    CHECK_NOTHROW(full_basis(6, 2));
    ::unsetenv("SYMSECTOR_SIZE_CAP");
    CHECK(size_cap() == kDefaultSizeCap);
}

TEST_CASE("config_string prints digits") {
    CHECK(config_string(10, 4, 2) == "1010");
    CHECK(config_string(7, 2, 3) == "21");
}
