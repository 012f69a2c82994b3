#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <vector>

#include "minpay/changemaking.hpp"
#include "minpay/currency.hpp"
#include "minpay/error.hpp"
#include "minpay/simulate.hpp"

namespace minpay {

struct LatticePoint {
    Money x = 0;
    Money y = 0;

    auto operator<=>(const LatticePoint&) const = default;
};

/// Planar point set over [0, extent)^2; points kept sorted lexicographically
/// and unique, which doubles as the canonical export order.
struct DelayPlot {
    enum class Source { simulated, predicted };

    Money extent = 0;
    Source source = Source::predicted;
    std::vector<LatticePoint> points;

    bool contains(LatticePoint p) const {
        return std::binary_search(points.begin(), points.end(), p);
    }

    bool operator==(const DelayPlot& o) const { return extent == o.extent && points == o.points; }
};

/// {(z(t), z(t+1))} over the run's change-value series.
inline DelayPlot delay_plot(const SimulationRun& r) {
    if (r.change_values.size() < 2)
        fail(errc::series_too_short, "delay plot needs at least two steps");
    DelayPlot plot;
    plot.extent = r.currency.banknote;
    plot.source = DelayPlot::Source::simulated;
    const std::size_t side = static_cast<std::size_t>(plot.extent);
    std::vector<char> seen(side * side, 0);
    for (std::size_t t = 0; t + 1 < r.change_values.size(); ++t) {
        const std::size_t idx = static_cast<std::size_t>(r.change_values[t]) * side +
                                static_cast<std::size_t>(r.change_values[t + 1]);
        if (!seen[idx]) {
            seen[idx] = 1;
            plot.points.push_back({r.change_values[t], r.change_values[t + 1]});
        }
    }
    std::sort(plot.points.begin(), plot.points.end());
    return plot;
}

/// All lattice pairs whose least-coin digit vectors satisfy, at every
/// denomination level, digit(x) + digit(y) <= ratio - 1. This is the
/// predicted envelope of the simulated delay plot for multiplicable
/// currencies.
inline DelayPlot admissible_set(const CurrencySpec& currency) {
    const ReprTable table{currency};
    const CurrencySpec& spec = table.currency();
    if (!classify(spec).multiplicable)
        fail(errc::not_multiplicable, "admissible set needs a multiplicable currency: " + spec.name);
    const std::vector<Money> ratios = level_ratios(spec);
    const std::size_t n = spec.coins.size();

    DelayPlot plot;
    plot.extent = spec.banknote;
    plot.source = DelayPlot::Source::predicted;
    for (std::size_t ux = 0; ux < table.entries(); ++ux) {
        const auto dx = table.digits(table.amount_at(ux));
        for (std::size_t uy = 0; uy < table.entries(); ++uy) {
            const auto dy = table.digits(table.amount_at(uy));
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) ok = dx[i] + dy[i] <= ratios[i] - 1;
            if (ok) plot.points.push_back({table.amount_at(ux), table.amount_at(uy)});
        }
    }
    return plot;  // loop order is already lexicographic
}

/// Same set built the other way: start from the whole banknote-sized block
/// and, per denomination level with ratio r, replace every block by the
/// r(r+1)/2 sub-blocks of the lower-left staircase.
inline DelayPlot admissible_set_recursive(const CurrencySpec& currency) {
    const CurrencySpec spec = validate(currency);
    if (!classify(spec).multiplicable)
        fail(errc::not_multiplicable, "staircase construction needs a multiplicable currency: " + spec.name);

    DelayPlot plot;
    plot.extent = spec.banknote;
    plot.source = DelayPlot::Source::predicted;

    std::vector<LatticePoint> blocks{{0, 0}};
    Money side = spec.banknote;
    for (Money coin : spec.coins) {
        const Money ratio = side / coin;
        std::vector<LatticePoint> refined;
        refined.reserve(blocks.size() * static_cast<std::size_t>(ratio * (ratio + 1) / 2));
        for (const LatticePoint& block : blocks)
            for (Money a = 0; a < ratio; ++a)
                for (Money b = 0; b + a < ratio; ++b)
                    refined.push_back({block.x + a * coin, block.y + b * coin});
        blocks = std::move(refined);
        side = coin;
    }
    plot.points = std::move(blocks);  // final blocks have the gcd as side; origins are the lattice points
    std::sort(plot.points.begin(), plot.points.end());
    return plot;
}

/// Fractal dimension of the delay plot for a geometric currency of ratio r:
/// D = ln(r(r+1)/2) / ln(r) = 1 + ln((r+1)/2) / ln(r).
inline double predicted_dimension(Money ratio) {
    if (ratio < 2) fail(errc::out_of_range, "ratio must be >= 2", ratio);
    const double r = static_cast<double>(ratio);
    return 1.0 + std::log((r + 1.0) / 2.0) / std::log(r);
}

struct BoxCounts {
    std::vector<long long> counts;  // counts[k] = occupied boxes of side base^k
    double slope = 0.0;             // least-squares fit of ln counts vs ln(1 / box side)
};

/// Box counting with boxes anchored at the origin and sides base^0..base^levels.
inline BoxCounts box_count_dimension(const DelayPlot& plot, Money base, int levels) {
    if (plot.points.empty()) fail(errc::empty_set, "box counting needs a non-empty point set");
    if (base < 2) fail(errc::out_of_range, "box-counting base must be >= 2", base);
    Money scale = 1;
    for (int k = 0; k < levels; ++k) {
        scale *= base;
        if (scale > plot.extent)
            fail(errc::scale_overflow,
                 "box side " + std::to_string(scale) + " exceeds extent " + std::to_string(plot.extent),
                 scale);
    }

    BoxCounts result;
    std::vector<long long> keys;
    keys.reserve(plot.points.size());
    Money box = 1;
    for (int k = 0; k <= levels; ++k) {
        keys.clear();
        for (const LatticePoint& p : plot.points)
            keys.push_back((p.x / box) * (plot.extent + 1) + (p.y / box));
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        result.counts.push_back(static_cast<long long>(keys.size()));
        box *= base;
    }

    const double ln_base = std::log(static_cast<double>(base));
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(result.counts.size());
    for (int k = 0; k <= levels; ++k) {
        const double x = -static_cast<double>(k) * ln_base;  // ln(1 / box side)
        const double y = std::log(static_cast<double>(result.counts[static_cast<std::size_t>(k)]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = m * sxx - sx * sx;
    result.slope = denom == 0.0 ? 0.0 : (m * sxy - sx * sy) / denom;
    return result;
}

/// Counts points whose digit vectors break the staircase bound
/// digit(x) + digit(y) <= floor(next denomination / coin) - 1 at some level.
/// Zero on the admissible set of a multiplicable currency; positive for the
/// simulated plots of non-multiplicable ones, whose structure is disordered.
inline long long naive_digit_bound_violations(const DelayPlot& plot, const CurrencySpec& currency) {
    const ReprTable table{currency};
    const CurrencySpec& spec = table.currency();
    const std::size_t n = spec.coins.size();
    std::vector<Money> bounds(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Money larger = i == 0 ? spec.banknote : spec.coins[i - 1];
        bounds[i] = larger / spec.coins[i] - 1;  // floor when the ratio is fractional
    }
    long long violations = 0;
    for (const LatticePoint& p : plot.points) {
        const auto dx = table.digits(p.x);
        const auto dy = table.digits(p.y);
        for (std::size_t i = 0; i < n; ++i)
            if (dx[i] + dy[i] > bounds[i]) {
                ++violations;
                break;
            }
    }
    return violations;
}

}  // namespace minpay
