#pragma once

#include <optional>
#include <vector>

#include "minpay/changemaking.hpp"
#include "minpay/currency.hpp"
#include "minpay/error.hpp"

namespace minpay {

/// The shopper's purse; banknotes are implicit and unlimited.
using Purse = CoinVector;

/// One minimal-payment step. Invariants (all enforced by construction and
/// checkable via verify()):
///   - paid and change never share a denomination
///   - after = before - paid + change, elementwise non-negative
///   - change value = paid value + banknotes_tendered * banknote - price
struct Transaction {
    Money price = 0;
    CoinVector before;
    CoinVector paid;
    Money banknotes_tendered = 0;
    CoinVector change;
    CoinVector after;

    bool verify(const CurrencySpec& spec) const {
        const std::size_t n = spec.coins.size();
        if (before.counts.size() != n || paid.counts.size() != n || change.counts.size() != n ||
            after.counts.size() != n)
            return false;
        for (std::size_t i = 0; i < n; ++i) {
            if (paid.counts[i] < 0 || change.counts[i] < 0 || after.counts[i] < 0) return false;
            if (paid.counts[i] > 0 && change.counts[i] > 0) return false;
            if (after.counts[i] != before.counts[i] - paid.counts[i] + change.counts[i]) return false;
        }
        return change.value(spec) ==
               paid.value(spec) + banknotes_tendered * spec.banknote - price;
    }
};

namespace detail {

inline void check_payment_inputs(const CoinVector& purse, Money price, const ReprTable& table) {
    if (price < 0)
        fail(errc::price_negative, "price " + std::to_string(price), price);
    if (price % table.gcd() != 0)
        fail(errc::price_not_multiple_of_gcd,
             "price " + std::to_string(price) + " is not a multiple of " + std::to_string(table.gcd()),
             price);
    if (purse.counts.size() != table.currency().coins.size())
        fail(errc::out_of_range, "purse has wrong denomination count");
    for (int c : purse.counts)
        if (c < 0) fail(errc::out_of_range, "negative purse count");
    if (purse.value(table.currency()) >= table.banknote())
        fail(errc::out_of_range, "purse value must stay below the banknote");
}

}  // namespace detail

/// The efficient transition: the purse jumps to the least-coin representation
/// of (value - price) mod banknote; coins paid and received are the positive
/// parts of the per-denomination differences, and banknotes cover the balance.
inline Transaction minimal_payment(const Purse& purse, Money price, const ReprTable& table) {
    detail::check_payment_inputs(purse, price, table);
    const CurrencySpec& spec = table.currency();
    const Money banknote = table.banknote();
    const Money before_value = purse.value(spec);
    const Money after_value = ((before_value - price) % banknote + banknote) % banknote;

    Transaction tx;
    tx.price = price;
    tx.before = purse;
    tx.after = table.min_vector(after_value);
    const std::size_t n = spec.coins.size();
    tx.paid.counts.assign(n, 0);
    tx.change.counts.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const int diff = tx.after.counts[i] - purse.counts[i];
        if (diff > 0)
            tx.change.counts[i] = diff;
        else
            tx.paid.counts[i] = -diff;
    }
    tx.banknotes_tendered = (price - tx.paid.value(spec) + tx.change.value(spec)) / banknote;
    return tx;
}

inline Transaction minimal_payment(const Purse& purse, Money price, const CurrencySpec& spec) {
    return minimal_payment(purse, price, ReprTable{spec});
}

/// Brute-force oracle: enumerates every coin sub-multiset of the purse and
/// every banknote count, lets the retailer hand back the least-coin change,
/// filters tenders whose change would share a denomination with the coins
/// paid, and keeps a transaction minimizing the resulting purse size.
/// Exponential in the purse size; intended for small test systems.
inline Transaction full_search_payment(const Purse& purse, Money price, const ReprTable& table) {
    detail::check_payment_inputs(purse, price, table);
    const CurrencySpec& spec = table.currency();
    const Money banknote = table.banknote();
    const std::size_t n = spec.coins.size();
    const Money max_banknotes = (price + banknote - 1) / banknote + 1;

    std::optional<Transaction> best;
    int best_size = 0;

    std::vector<int> pay(n, 0);
    for (;;) {
        Money pay_value = 0;
        for (std::size_t i = 0; i < n; ++i) pay_value += Money(pay[i]) * spec.coins[i];

        for (Money kb = 0; kb <= max_banknotes; ++kb) {
            const Money tender = pay_value + kb * banknote;
            if (tender < price) continue;
            const Money change_value = (tender - price) % banknote;
            const auto change = table.digits(change_value);
            bool disjoint = true;
            for (std::size_t i = 0; i < n && disjoint; ++i)
                disjoint = pay[i] == 0 || change[i] == 0;
            if (!disjoint) continue;

            int after_size = 0;
            for (std::size_t i = 0; i < n; ++i)
                after_size += purse.counts[i] - pay[i] + change[i];
            if (!best || after_size < best_size) {
                Transaction tx;
                tx.price = price;
                tx.before = purse;
                tx.paid.counts = pay;
                tx.banknotes_tendered = kb;
                tx.change.counts.assign(change.begin(), change.end());
                tx.after.counts.resize(n);
                for (std::size_t i = 0; i < n; ++i)
                    tx.after.counts[i] = purse.counts[i] - pay[i] + change[i];
                best = std::move(tx);
                best_size = after_size;
            }
        }

        // odometer over sub-multisets of the purse
        std::size_t i = 0;
        while (i < n && pay[i] == purse.counts[i]) pay[i++] = 0;
        if (i == n) break;
        ++pay[i];
    }
    return *best;  // the all-banknote tender is always legal
}

inline Transaction full_search_payment(const Purse& purse, Money price, const CurrencySpec& spec) {
    return full_search_payment(purse, price, ReprTable{spec});
}

}  // namespace minpay
