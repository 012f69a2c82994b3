#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "minpay/changemaking.hpp"
#include "minpay/currency.hpp"
#include "minpay/error.hpp"
#include "minpay/payment.hpp"

namespace minpay {

/// SplitMix64 (Steele, Lea & Flood's SplittableRandom update and finalizer).
/// One 64-bit state word; identical output on every platform, which keeps
/// golden simulation outputs portable. Child generators for sharded runs are
/// seeded from a parent's output stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, bound), bound >= 1; rejection sampling, no modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    SplitMix64 split() { return SplitMix64{next()}; }

private:
    std::uint64_t state_;
};

/// Price distribution for a run. Uniform draws integers from [1, banknote];
/// Triangular draws from the triangular density on [0, banknote] with the
/// given peak via inverse CDF, then rounds up into [1, banknote]. For
/// currencies whose coin gcd g exceeds 1, prices are confined to multiples
/// of g on the same interval.
struct PriceModel {
    enum class Kind { uniform, triangular };
    Kind kind = Kind::uniform;
    Money peak = 0;  // triangular only, in [0, banknote]

    static PriceModel uniform() { return {Kind::uniform, 0}; }
    static PriceModel triangular(Money peak) { return {Kind::triangular, peak}; }

    bool operator==(const PriceModel&) const = default;
};

inline Money draw_price(const PriceModel& model, const CurrencySpec& spec, Money gcd, SplitMix64& rng) {
    const Money banknote = spec.banknote;
    if (model.kind == PriceModel::Kind::uniform)
        return gcd * (1 + static_cast<Money>(rng.next_below(static_cast<std::uint64_t>(banknote / gcd))));

    if (model.peak < 0 || model.peak > banknote)
        fail(errc::out_of_range, "triangular peak must lie in [0, banknote]", model.peak);
    const double b = static_cast<double>(banknote);
    const double m = static_cast<double>(model.peak);
    const double u = rng.next_unit();
    double x;
    if (u * b < m)
        x = std::sqrt(u * b * m);
    else
        x = b - std::sqrt((1.0 - u) * b * (b - m));
    Money price = static_cast<Money>(std::ceil(x));
    price = ((price + gcd - 1) / gcd) * gcd;
    return std::clamp<Money>(price, gcd, banknote);
}

/// Record of one seeded run. Reproducible bit-exactly from
/// (currency, model, steps, seed).
struct SimulationRun {
    CurrencySpec currency;
    PriceModel model;
    std::uint64_t seed = 0;
    long long steps = 0;
    std::vector<std::int32_t> prices;
    std::vector<std::int32_t> change_values;  // value of the change in each step
    std::vector<std::int32_t> purse_values;   // purse value after each step
    std::vector<std::int32_t> purse_sizes;    // coins in the purse after each step
    CoinVector final_purse;
    // Invariant accounting. Change minimality is checked every step; the
    // per-denomination successive-change bound only applies to multiplicable
    // currencies.
    long long change_minimality_violations = 0;
    long long digit_bound_violations = 0;
    bool digit_bounds_checked = false;

    bool operator==(const SimulationRun&) const = default;
};

/// Iterates the minimal payment `steps` times from an empty purse with
/// model-drawn prices.
inline SimulationRun run(const CurrencySpec& currency, const PriceModel& model, long long steps,
                         std::uint64_t seed) {
    if (steps < 1) fail(errc::out_of_range, "steps must be >= 1", steps);
    const ReprTable table{currency};
    const CurrencySpec& spec = table.currency();
    const Money banknote = table.banknote();
    const Money g = table.gcd();
    const std::size_t n = spec.coins.size();
    const CurrencyClass cls = classify(spec);

    std::vector<Money> bounds;  // per-level digit-sum bound, ratio - 1
    if (cls.multiplicable)
        for (Money r : level_ratios(spec)) bounds.push_back(r - 1);

    SimulationRun out;
    out.currency = spec;
    out.model = model;
    out.seed = seed;
    out.steps = steps;
    out.prices.reserve(static_cast<std::size_t>(steps));
    out.change_values.reserve(static_cast<std::size_t>(steps));
    out.purse_values.reserve(static_cast<std::size_t>(steps));
    out.purse_sizes.reserve(static_cast<std::size_t>(steps));
    out.digit_bounds_checked = cls.multiplicable;

    SplitMix64 rng{seed};
    Money residue = 0;  // purse value; the purse itself is always table.digits(residue)
    std::vector<int> change(n, 0), prev_change(n, 0);

    for (long long t = 0; t < steps; ++t) {
        const Money price = draw_price(model, spec, g, rng);
        const Money next_residue = ((residue - price) % banknote + banknote) % banknote;
        const auto before = table.digits(residue);
        const auto after = table.digits(next_residue);

        Money change_value = 0;
        int change_size = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const int diff = after[i] - before[i];
            change[i] = diff > 0 ? diff : 0;
            change_value += Money(change[i]) * spec.coins[i];
            change_size += change[i];
        }
        if (change_size != table.min_count(change_value)) ++out.change_minimality_violations;
        if (cls.multiplicable && t > 0)
            for (std::size_t i = 0; i < n; ++i)
                if (prev_change[i] + change[i] > bounds[i]) ++out.digit_bound_violations;

        out.prices.push_back(static_cast<std::int32_t>(price));
        out.change_values.push_back(static_cast<std::int32_t>(change_value));
        out.purse_values.push_back(static_cast<std::int32_t>(next_residue));
        out.purse_sizes.push_back(static_cast<std::int32_t>(table.min_count(next_residue)));
        std::swap(change, prev_change);
        residue = next_residue;
    }
    out.final_purse = table.min_vector(residue);
    return out;
}

/// Exact fraction, reduced, denominator positive.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long num, long long den) {
        const long long g = std::gcd(num, den);
        if (g != 0) {
            num /= g;
            den /= g;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return {num, den};
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

struct CoinStats {
    Rational mean;  // exact: total coins held across steps / steps
    int max = 0;
    std::vector<long long> histogram;  // histogram[s] = steps with purse size s

    bool operator==(const CoinStats&) const = default;
};

inline CoinStats coin_count_stats(const SimulationRun& r) {
    if (r.purse_sizes.empty()) fail(errc::out_of_range, "empty run");
    CoinStats stats;
    long long sum = 0;
    for (std::int32_t s : r.purse_sizes) {
        sum += s;
        if (s > stats.max) stats.max = s;
    }
    stats.histogram.assign(static_cast<std::size_t>(stats.max) + 1, 0);
    for (std::int32_t s : r.purse_sizes) ++stats.histogram[static_cast<std::size_t>(s)];
    stats.mean = Rational::of(sum, static_cast<long long>(r.purse_sizes.size()));
    return stats;
}

/// Mean of the least coin counts over all representable amounts below the
/// banknote; the long-run purse-size average when prices are uniform.
inline Rational table_mean_coins(const ReprTable& table) {
    long long sum = 0;
    for (std::size_t u = 0; u < table.entries(); ++u) sum += table.min_count(table.amount_at(u));
    return Rational::of(sum, static_cast<long long>(table.entries()));
}

/// Exact average number of coins in the purse under uniform prices. For a
/// multiplicable currency this is the closed form sum of (ratio - 1)/2 over
/// all denomination levels; otherwise the representation-table mean.
inline Rational expected_avg_coins(const CurrencySpec& currency) {
    const CurrencySpec spec = validate(currency);
    if (classify(spec).multiplicable) {
        long long sum = 0;
        for (Money r : level_ratios(spec)) sum += r - 1;
        return Rational::of(sum, 2);
    }
    return table_mean_coins(ReprTable{spec});
}

struct UniformityCheck {
    double chi2 = 0.0;
    double threshold = 0.0;
    long long dof = 0;
    bool uniform_ok = false;
};

/// Chi-squared test of the purse-value histogram against the uniform
/// distribution over representable residues.
inline UniformityCheck stationary_distribution_check(const SimulationRun& r,
                                                     double significance = 0.001) {
    const Money banknote = r.currency.banknote;
    if (r.steps < 100 * banknote)
        fail(errc::too_few_steps,
             "need at least " + std::to_string(100 * banknote) + " steps", r.steps);
    const Money g = coin_gcd(r.currency);
    const std::size_t bins = static_cast<std::size_t>(banknote / g);
    std::vector<long long> counts(bins, 0);
    for (std::int32_t v : r.purse_values) ++counts[static_cast<std::size_t>(v / g)];

    UniformityCheck check;
    const double expected = static_cast<double>(r.steps) / static_cast<double>(bins);
    for (long long c : counts) {
        const double d = static_cast<double>(c) - expected;
        check.chi2 += d * d / expected;
    }
    check.dof = static_cast<long long>(bins) - 1;
    const boost::math::chi_squared dist(static_cast<double>(check.dof));
    check.threshold = boost::math::quantile(dist, 1.0 - significance);
    check.uniform_ok = check.chi2 <= check.threshold;
    return check;
}

struct BaselineResult {
    double mean_purse_size = 0.0;
    int max_purse_size = 0;
};

namespace detail {

/// Smallest achievable coin sub-multiset sum >= target, or -1. Bitset subset
/// sum with binary splitting over the per-denomination counts.
inline Money smallest_subset_sum_at_least(const std::vector<int>& purse, const CurrencySpec& spec,
                                          Money target, Money total) {
    if (target > total) return -1;
    if (target <= 0) return 0;
    const std::size_t words = static_cast<std::size_t>(total / 64) + 1;
    std::vector<std::uint64_t> reach(words, 0);
    reach[0] = 1;  // empty subset
    auto shift_or = [&](Money by) {
        const std::size_t word_shift = static_cast<std::size_t>(by / 64);
        const unsigned bit_shift = static_cast<unsigned>(by % 64);
        for (std::size_t w = words; w-- > 0;) {
            std::uint64_t v = 0;
            if (w >= word_shift) {
                v = reach[w - word_shift] << bit_shift;
                if (bit_shift != 0 && w > word_shift)
                    v |= reach[w - word_shift - 1] >> (64 - bit_shift);
            }
            reach[w] |= v;
        }
    };
    for (std::size_t i = 0; i < purse.size(); ++i) {
        int remaining = purse[i];
        int chunk = 1;
        while (remaining > 0) {
            const int take = std::min(chunk, remaining);
            shift_or(spec.coins[i] * take);
            remaining -= take;
            chunk *= 2;
        }
    }
    for (Money s = target; s <= total; ++s)
        if (reach[static_cast<std::size_t>(s / 64)] >> (s % 64) & 1) return s;
    return -1;
}

/// Finds some sub-multiset with the exact sum, largest denominations first.
/// Memoizes failed (level, remaining) states so the search stays polynomial.
inline bool pick_subset(const std::vector<int>& purse, const CurrencySpec& spec, std::size_t level,
                        Money remaining, std::vector<int>& chosen,
                        std::vector<std::vector<char>>& dead) {
    if (remaining == 0) {
        for (std::size_t i = level; i < purse.size(); ++i) chosen[i] = 0;
        return true;
    }
    if (level == purse.size()) return false;
    if (dead[level][static_cast<std::size_t>(remaining)]) return false;
    const Money coin = spec.coins[level];
    const int cap = static_cast<int>(std::min<Money>(purse[level], remaining / coin));
    for (int take = cap; take >= 0; --take) {
        chosen[level] = take;
        if (pick_subset(purse, spec, level + 1, remaining - coin * take, chosen, dead)) return true;
    }
    dead[level][static_cast<std::size_t>(remaining)] = 1;
    return false;
}

}  // namespace detail

/// Baseline shopper strategy for lower-bound comparisons: tender the smallest
/// amount >= price that the purse's coins plus banknotes can form, preferring
/// coins over banknotes on ties; the retailer still returns least-coin change.
/// The purse is a plain accumulator here, not reduced to a canonical state.
inline BaselineResult greedy_tender_baseline(const CurrencySpec& currency,
                                             std::span<const std::int32_t> prices) {
    if (prices.empty()) fail(errc::out_of_range, "empty price stream");
    const ReprTable table{currency};
    const CurrencySpec& spec = table.currency();
    const Money banknote = table.banknote();
    const std::size_t n = spec.coins.size();

    std::vector<int> purse(n, 0);
    long long size_sum = 0;
    BaselineResult result;

    for (std::int32_t p32 : prices) {
        const Money price = p32;
        Money total = 0;
        for (std::size_t i = 0; i < n; ++i) total += Money(purse[i]) * spec.coins[i];

        // Smallest tender = kb banknotes + coin subset; scan banknote counts
        // from zero so ties go to coin-heavy tenders.
        Money best_tender = -1, best_coin_sum = 0;
        for (Money kb = 0; kb * banknote < price + banknote; ++kb) {
            const Money need = price - kb * banknote;
            const Money s = detail::smallest_subset_sum_at_least(purse, spec, need, total);
            if (s < 0) continue;
            const Money tender = kb * banknote + s;
            if (best_tender < 0 || tender < best_tender) {
                best_tender = tender;
                best_coin_sum = s;
            }
        }

        std::vector<int> paid(n, 0);
        if (best_coin_sum > 0) {
            std::vector<std::vector<char>> dead(n, std::vector<char>(static_cast<std::size_t>(best_coin_sum) + 1, 0));
            const bool found = detail::pick_subset(purse, spec, 0, best_coin_sum, paid, dead);
            if (!found) fail(errc::out_of_range, "subset reconstruction failed");  // unreachable
        }

        const Money change_value = best_tender - price;  // < banknote
        const auto change = table.digits(change_value);
        int size = 0;
        for (std::size_t i = 0; i < n; ++i) {
            purse[i] += change[i] - paid[i];
            size += purse[i];
        }
        size_sum += size;
        if (size > result.max_purse_size) result.max_purse_size = size;
    }
    result.mean_purse_size = static_cast<double>(size_sum) / static_cast<double>(prices.size());
    return result;
}

}  // namespace minpay
