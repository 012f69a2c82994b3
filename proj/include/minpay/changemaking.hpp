#pragma once

#include <cassert>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "minpay/currency.hpp"
#include "minpay/error.hpp"

namespace minpay {

/// Per-denomination coin counts, aligned with CurrencySpec::coins
/// (descending order). Doubles as purse content and as change.
struct CoinVector {
    std::vector<int> counts;

    int size() const {
        int total = 0;
        for (int c : counts) total += c;
        return total;
    }

    Money value(const CurrencySpec& spec) const {
        assert(counts.size() == spec.coins.size());
        Money v = 0;
        for (std::size_t i = 0; i < counts.size(); ++i) v += Money(counts[i]) * spec.coins[i];
        return v;
    }

    bool operator==(const CoinVector&) const = default;
};

inline CoinVector zero_vector(const CurrencySpec& spec) {
    return CoinVector{std::vector<int>(spec.coins.size(), 0)};
}

/// Least-coin representations of every representable amount in [0, banknote),
/// built once by dynamic programming. Ties between equal-size representations
/// are broken toward larger denominations, so the stored vector is the
/// lexicographically greatest counts vector in descending-denomination order.
class ReprTable {
public:
    explicit ReprTable(CurrencySpec spec) : spec_(validate(std::move(spec))) {
        gcd_ = coin_gcd(spec_);
        const std::size_t n = spec_.coins.size();
        const std::size_t entries = static_cast<std::size_t>(spec_.banknote / gcd_);

        // DP on the g-scaled lattice: unit[u] is amount u*g.
        std::vector<Money> unit_coins(n);
        for (std::size_t i = 0; i < n; ++i) unit_coins[i] = spec_.coins[i] / gcd_;

        min_count_.assign(entries, 0);
        std::vector<int> pick(entries, -1);  // index of the largest coin starting an optimal representation
        for (std::size_t u = 1; u < entries; ++u) {
            int best = std::numeric_limits<int>::max();
            int best_coin = -1;
            for (std::size_t i = 0; i < n; ++i) {
                const Money cu = unit_coins[i];
                if (cu > static_cast<Money>(u)) continue;
                const int cand = min_count_[u - static_cast<std::size_t>(cu)] + 1;
                if (cand < best) {  // first hit wins: coins are scanned largest-first
                    best = cand;
                    best_coin = static_cast<int>(i);
                }
            }
            // validate() guarantees representability of every entry
            assert(best_coin >= 0);
            min_count_[u] = best;
            pick[u] = best_coin;
        }

        counts_.assign(entries * n, 0);
        max_min_count_ = 0;
        for (std::size_t u = 1; u < entries; ++u) {
            const std::size_t i = static_cast<std::size_t>(pick[u]);
            const std::size_t prev = u - static_cast<std::size_t>(unit_coins[i]);
            auto row = counts_.begin() + static_cast<std::ptrdiff_t>(u * n);
            std::copy_n(counts_.begin() + static_cast<std::ptrdiff_t>(prev * n), n, row);
            ++row[static_cast<std::ptrdiff_t>(i)];
            if (min_count_[u] > max_min_count_) max_min_count_ = min_count_[u];
        }
    }

    const CurrencySpec& currency() const { return spec_; }
    Money banknote() const { return spec_.banknote; }
    Money gcd() const { return gcd_; }
    std::size_t entries() const { return min_count_.size(); }
    Money amount_at(std::size_t index) const { return static_cast<Money>(index) * gcd_; }

    bool representable(Money amount) const {
        return amount >= 0 && amount < spec_.banknote && amount % gcd_ == 0;
    }

    int min_count(Money amount) const {
        check(amount);
        return min_count_[static_cast<std::size_t>(amount / gcd_)];
    }

    /// View of the per-denomination counts for `amount` (descending order).
    std::span<const int> digits(Money amount) const {
        check(amount);
        const std::size_t n = spec_.coins.size();
        return {counts_.data() + static_cast<std::size_t>(amount / gcd_) * n, n};
    }

    CoinVector min_vector(Money amount) const {
        auto row = digits(amount);
        return CoinVector{std::vector<int>(row.begin(), row.end())};
    }

    int max_min_count() const { return max_min_count_; }

private:
    void check(Money amount) const {
        if (amount < 0 || amount >= spec_.banknote)
            fail(errc::out_of_range,
                 "amount " + std::to_string(amount) + " not in [0, " + std::to_string(spec_.banknote) + ")",
                 amount);
        if (amount % gcd_ != 0)
            fail(errc::not_multiple_of_gcd,
                 "amount " + std::to_string(amount) + " is not a multiple of " + std::to_string(gcd_), amount);
    }

    CurrencySpec spec_;
    Money gcd_ = 1;
    std::vector<int> min_count_;
    std::vector<int> counts_;  // entries x coins, row-major
    int max_min_count_ = 0;
};

/// Least-size representation of `amount` (larger-coin tie-break).
inline CoinVector min_repr(Money amount, const CurrencySpec& spec) {
    return ReprTable(spec).min_vector(amount);
}

/// Repeatedly takes the largest coin that fits. Throws GreedyStuck when a
/// nonzero remainder admits no coin; cannot happen for validated currencies.
inline CoinVector greedy_repr(Money amount, const CurrencySpec& spec) {
    if (amount < 0 || amount >= spec.banknote)
        fail(errc::out_of_range, "amount " + std::to_string(amount) + " out of range", amount);
    const Money g = coin_gcd(spec);
    if (amount % g != 0)
        fail(errc::not_multiple_of_gcd, "amount " + std::to_string(amount), amount);
    CoinVector result{std::vector<int>(spec.coins.size(), 0)};
    Money remaining = amount;
    for (std::size_t i = 0; i < spec.coins.size(); ++i) {
        result.counts[i] = static_cast<int>(remaining / spec.coins[i]);
        remaining %= spec.coins[i];
    }
    if (remaining != 0)
        fail(errc::greedy_stuck, "greedy cannot finish; remaining " + std::to_string(remaining), remaining);
    return result;
}

/// True when the greedy representation is least-size for every representable
/// amount below the banknote.
inline bool is_canonical(const CurrencySpec& spec) {
    const ReprTable table{spec};
    for (std::size_t u = 0; u < table.entries(); ++u) {
        const Money amount = table.amount_at(u);
        try {
            if (greedy_repr(amount, spec).size() != table.min_count(amount)) return false;
        } catch (const Error& e) {
            if (e.code() == errc::greedy_stuck) return false;
            throw;
        }
    }
    return true;
}

}  // namespace minpay
