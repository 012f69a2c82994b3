#include <bit>

#include <catch2/catch_amalgamated.hpp>

#include <minpay/automata.hpp>
#include <minpay/fractal.hpp>

#include "oracles.hpp"

using namespace minpay;
using oracle::error_code_of;

TEST_CASE("the left-XOR evolution lays down binomial parity") {
    const BinaryGrid grid = rule60(64);
    for (int t = 0; t < 64; ++t)
        for (int n = 0; n < 64; ++n) {
            INFO("row " << t << ", col " << n);
            const bool expected = n <= t && oracle::binomial_is_odd(t, n);
            REQUIRE((grid.at(t, n) != 0) == expected);
        }
}

TEST_CASE("the generic rule engine agrees with the direct evolution") {
    CHECK(compare_grids(eca(60, 64), rule60(64)).equal);
    CHECK(compare_grids(eca(60, 3), rule60(3)).equal);
}

TEST_CASE("other exclusive-or rules exist but differ from the left-XOR rule") {
    const GridDiff diff = compare_grids(eca(90, 32), rule60(32));
    CHECK(diff.diff_count > 0);
    CHECK(eca(90, 32).at(0, 0) == 1);
    CHECK(eca(102, 16).rows == 16);
}

TEST_CASE("rejects out-of-range rule numbers and sizes") {
    CHECK(error_code_of([] { eca(256, 8); }) == errc::out_of_range);
    CHECK(error_code_of([] { eca(60, 0); }) == errc::out_of_range);
    CHECK(error_code_of([] { rule60(0); }) == errc::out_of_range);
    CHECK(error_code_of([] { pascal_mod(1, 8); }) == errc::out_of_range);
    CHECK(error_code_of([] { pascal_mod(3, 0); }) == errc::out_of_range);
}

TEST_CASE("triangle residues match exact binomial arithmetic") {
    for (long long r : {2ll, 3ll, 4ll, 5ll, 6ll, 7ll, 9ll}) {
        const BinaryGrid grid = pascal_mod(r, 36);
        for (int t = 0; t < 36; ++t)
            for (int n = 0; n < 36; ++n) {
                INFO("mod " << r << ", row " << t << ", col " << n);
                const bool expected = n <= t && oracle::binomial_mod(t, n, r) != 0;
                REQUIRE((grid.at(t, n) != 0) == expected);
            }
    }
}

TEST_CASE("the left-XOR triangle equals binomial parity at every tested size") {
    for (int size : {1, 2, 3, 16, 100, 256, 512})
        CHECK(compare_grids(rule60(size), pascal_mod(2, size)).equal);
}

TEST_CASE("the sheared no-carry point set is binomial parity") {
    for (int n = 1; n <= 8; ++n) {
        const BinaryGrid mapped =
            map_delayplot_to_triangle(admissible_set(binary_currency(n)));
        const int side = 1 << n;
        REQUIRE(mapped.rows == side);
        REQUIRE(mapped.cols == side);
        CHECK(compare_grids(mapped, pascal_mod(2, side)).equal);
    }
}

TEST_CASE("prime ratios reproduce the residue triangle; composite ratios do not") {
    auto mapped = [](Money ratio, int levels) {
        return map_delayplot_to_triangle(admissible_set(geometric_currency(ratio, levels)));
    };
    CHECK(compare_grids(mapped(3, 4), pascal_mod(3, 81)).equal);
    CHECK(compare_grids(mapped(5, 3), pascal_mod(5, 125)).equal);
    CHECK(compare_grids(mapped(7, 2), pascal_mod(7, 49)).equal);

    CHECK(compare_grids(mapped(4, 3), pascal_mod(4, 64)).diff_count > 0);
    CHECK(compare_grids(mapped(6, 2), pascal_mod(6, 36)).diff_count > 0);
    CHECK(compare_grids(mapped(8, 2), pascal_mod(8, 64)).diff_count > 0);
    CHECK(compare_grids(mapped(9, 2), pascal_mod(9, 81)).diff_count > 0);
}

TEST_CASE("subdividing cells doubles the triangle in place") {
    for (int n : {1, 2, 4, 8, 16, 32}) {
        INFO("size " << n);
        REQUIRE(compare_grids(subdivide_grid(rule60(n)), rule60(2 * n)).equal);
    }

    BinaryGrid zero(3, 3);
    const BinaryGrid zero2 = subdivide_grid(zero);
    CHECK(zero2.rows == 6);
    for (std::uint8_t c : zero2.cells) REQUIRE(c == 0);

    BinaryGrid seed(1, 1);
    seed.set(0, 0, 1);
    const BinaryGrid staircase = subdivide_grid(seed);
    CHECK(staircase.at(0, 0) == 1);
    CHECK(staircase.at(0, 1) == 0);
    CHECK(staircase.at(1, 0) == 1);
    CHECK(staircase.at(1, 1) == 1);
}

TEST_CASE("subdivision needs a square grid") {
    BinaryGrid rect(2, 3);
    CHECK(error_code_of([&] { subdivide_grid(rect); }) == errc::grid_not_from_rule60);
}

TEST_CASE("row weights double with each binary digit of the row index") {
    const BinaryGrid grid = rule60(256);
    for (int t = 0; t < 256; ++t) {
        INFO("row " << t);
        const long long expected = 1ll << std::popcount(static_cast<unsigned>(t));
        REQUIRE(row_weight(grid, t) == expected);
    }
    CHECK(error_code_of([&] { row_weight(grid, 256); }) == errc::out_of_range);
    CHECK(error_code_of([&] { row_weight(grid, -1); }) == errc::out_of_range);
}

TEST_CASE("grid comparison pads with zeros and counts every differing cell") {
    BinaryGrid a(2, 2);
    a.set(0, 0, 1);
    a.set(1, 1, 1);
    BinaryGrid b(3, 3);
    b.set(0, 0, 1);
    b.set(2, 2, 1);
    const GridDiff diff = compare_grids(a, b);
    CHECK_FALSE(diff.equal);
    CHECK(diff.diff_count == 2);  // (1,1) only in a, (2,2) only in b
    CHECK(compare_grids(a, a).equal);
}

TEST_CASE("cropping keeps the top-left corner and zero-fills the rest") {
    const BinaryGrid grid = rule60(8);
    const BinaryGrid small = crop(grid, 4, 4);
    for (int t = 0; t < 4; ++t)
        for (int n = 0; n < 4; ++n) REQUIRE(small.at(t, n) == grid.at(t, n));
    const BinaryGrid big = crop(grid, 10, 10);
    CHECK(big.at(9, 9) == 0);
    CHECK(compare_grids(big, grid).equal);  // zero padding adds nothing
}

TEST_CASE("the triangle map rejects an empty point set") {
    DelayPlot empty;
    empty.extent = 4;
    CHECK(error_code_of([&] { map_delayplot_to_triangle(empty); }) == errc::empty_set);
}
