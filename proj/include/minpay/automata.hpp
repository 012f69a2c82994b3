#pragma once

#include <cstdint>
#include <vector>

#include "minpay/currency.hpp"
#include "minpay/error.hpp"
#include "minpay/fractal.hpp"

namespace minpay {

/// Dense 0/1 grid, row-major. Row 0 is the seed row / triangle apex.
struct BinaryGrid {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> cells;

    BinaryGrid() = default;
    BinaryGrid(int r, int c)
        : rows(r), cols(c), cells(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {
        if (r < 1 || c < 1) fail(errc::out_of_range, "grid dimensions must be positive");
    }

    std::uint8_t at(int r, int c) const {
        return cells[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                     static_cast<std::size_t>(c)];
    }
    void set(int r, int c, std::uint8_t v) {
        cells[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
              static_cast<std::size_t>(c)] = v;
    }

    bool operator==(const BinaryGrid&) const = default;
};

/// Elementary cellular automaton, left-justified: a single 1 at column 0 of
/// row 0, zero boundary, `steps` rows and columns. The new cell state is the
/// rule bit indexed by the (left, self, right) neighborhood read as a 3-bit
/// number.
inline BinaryGrid eca(unsigned rule, int steps) {
    if (rule > 255) fail(errc::out_of_range, "rule must be in [0, 255]", rule);
    if (steps < 1) fail(errc::out_of_range, "step count must be positive", steps);
    BinaryGrid grid(steps, steps);
    grid.set(0, 0, 1);
    for (int t = 1; t < steps; ++t)
        for (int c = 0; c < steps; ++c) {
            const unsigned left = c > 0 ? grid.at(t - 1, c - 1) : 0;
            const unsigned self = grid.at(t - 1, c);
            const unsigned right = c + 1 < steps ? grid.at(t - 1, c + 1) : 0;
            const unsigned hood = (left << 2) | (self << 1) | right;
            grid.set(t, c, static_cast<std::uint8_t>((rule >> hood) & 1u));
        }
    return grid;
}

/// Rule 60: each cell is the XOR of itself and its left neighbor one row up.
/// With a single left-justified seed this lays down Pascal's triangle mod 2.
inline BinaryGrid rule60(int steps) {
    if (steps < 1) fail(errc::out_of_range, "step count must be positive", steps);
    BinaryGrid grid(steps, steps);
    grid.set(0, 0, 1);
    for (int t = 1; t < steps; ++t)
        for (int c = 0; c < steps; ++c) {
            const std::uint8_t left = c > 0 ? grid.at(t - 1, c - 1) : 0;
            grid.set(t, c, static_cast<std::uint8_t>(left ^ grid.at(t - 1, c)));
        }
    return grid;
}

/// Left-justified Pascal's triangle: cell (t, n) is 1 iff C(t, n) != 0 mod
/// `modulus`. Residues are carried row to row, so no big-integer arithmetic
/// is needed.
inline BinaryGrid pascal_mod(Money modulus, int rows) {
    if (modulus < 2) fail(errc::out_of_range, "modulus must be >= 2", modulus);
    if (rows < 1) fail(errc::out_of_range, "row count must be positive", rows);
    BinaryGrid grid(rows, rows);
    std::vector<Money> prev(static_cast<std::size_t>(rows), 0);
    std::vector<Money> cur(static_cast<std::size_t>(rows), 0);
    prev[0] = 1 % modulus;
    grid.set(0, 0, prev[0] != 0);
    for (int t = 1; t < rows; ++t) {
        for (int n = 0; n < rows; ++n) {
            const Money left = n > 0 ? prev[static_cast<std::size_t>(n - 1)] : 0;
            cur[static_cast<std::size_t>(n)] = (left + prev[static_cast<std::size_t>(n)]) % modulus;
            grid.set(t, n, cur[static_cast<std::size_t>(n)] != 0);
        }
        std::swap(prev, cur);
    }
    return grid;
}

/// Shear a delay plot into triangle coordinates: point (x, y) marks cell
/// (row x + y, column x). On the admissible set of a geometric currency with
/// prime ratio r this reproduces Pascal's triangle mod r.
inline BinaryGrid map_delayplot_to_triangle(const DelayPlot& plot) {
    if (plot.points.empty()) fail(errc::empty_set, "cannot map an empty point set");
    Money max_sum = 0;
    for (const LatticePoint& p : plot.points) max_sum = std::max(max_sum, p.x + p.y);
    const int side = static_cast<int>(max_sum) + 1;
    BinaryGrid grid(side, side);
    for (const LatticePoint& p : plot.points)
        grid.set(static_cast<int>(p.x + p.y), static_cast<int>(p.x), 1);
    return grid;
}

struct GridDiff {
    bool equal = false;
    long long diff_count = 0;  // cells that differ after zero-padding to the common shape
};

inline GridDiff compare_grids(const BinaryGrid& a, const BinaryGrid& b) {
    const int rows = std::max(a.rows, b.rows);
    const int cols = std::max(a.cols, b.cols);
    GridDiff diff;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const std::uint8_t va = (r < a.rows && c < a.cols) ? a.at(r, c) : 0;
            const std::uint8_t vb = (r < b.rows && c < b.cols) ? b.at(r, c) : 0;
            if (va != vb) ++diff.diff_count;
        }
    diff.equal = diff.diff_count == 0;
    return diff;
}

/// Doubles the grid: every 1-cell (t, n) becomes 1s at (2t, 2n), (2t+1, 2n)
/// and (2t+1, 2n+1), with (2t, 2n+1) left 0; every 0-cell becomes four 0s.
/// Applied to the rule-60 triangle on n rows this yields the triangle on 2n
/// rows, which is the self-similarity behind its gasket shape.
inline BinaryGrid subdivide_grid(const BinaryGrid& grid) {
    if (grid.rows != grid.cols)
        fail(errc::grid_not_from_rule60, "subdivision is defined for square grids only");
    BinaryGrid out(grid.rows * 2, grid.cols * 2);
    for (int t = 0; t < grid.rows; ++t)
        for (int n = 0; n < grid.cols; ++n)
            if (grid.at(t, n)) {
                out.set(2 * t, 2 * n, 1);
                out.set(2 * t + 1, 2 * n, 1);
                out.set(2 * t + 1, 2 * n + 1, 1);
            }
    return out;
}

/// Top-left sub-grid; out-of-range cells read as 0.
inline BinaryGrid crop(const BinaryGrid& grid, int rows, int cols) {
    BinaryGrid out(rows, cols);
    for (int r = 0; r < std::min(rows, grid.rows); ++r)
        for (int c = 0; c < std::min(cols, grid.cols); ++c) out.set(r, c, grid.at(r, c));
    return out;
}

/// Number of 1s in one row. For the rule-60 triangle row t this equals
/// 2^popcount(t).
inline long long row_weight(const BinaryGrid& grid, int row) {
    if (row < 0 || row >= grid.rows) fail(errc::out_of_range, "row index out of range", row);
    long long w = 0;
    for (int c = 0; c < grid.cols; ++c) w += grid.at(row, c);
    return w;
}

}  // namespace minpay
