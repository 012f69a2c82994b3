#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minpay/error.hpp"

namespace minpay {

/// All amounts are integers in minor units (cent, yen, half-ore, ...).
using Money = long long;

/// A currency system: coin denominations in strictly descending order plus
/// the smallest banknote. Treat as immutable once validate() has accepted it.
struct CurrencySpec {
    std::string name;
    std::vector<Money> coins;  // strictly descending, all > 0
    Money banknote = 0;        // > coins.front()

    bool operator==(const CurrencySpec&) const = default;
};

struct CurrencyClass {
    bool multiplicable = false;           // each coin divides the next larger; largest divides the banknote
    std::optional<Money> geometric_ratio; // set when denominations are g, g*r, ..., g*r^(n-1), banknote g*r^n
    Money gcd = 1;
};

inline Money coin_gcd(const CurrencySpec& spec) {
    Money g = 0;
    for (Money c : spec.coins) g = std::gcd(g, c);
    return g;
}

/// Checks all structural invariants and, via a reachability sweep, that every
/// multiple of gcd below the banknote has at least one coin representation.
/// Returns the spec unchanged on success, throws Error otherwise.
inline CurrencySpec validate(CurrencySpec spec) {
    if (spec.coins.empty())
        fail(errc::empty_coin_list, "currency has no coins");
    for (Money c : spec.coins)
        if (c <= 0) fail(errc::non_positive, "coin denomination " + std::to_string(c), c);
    if (spec.banknote <= 0)
        fail(errc::non_positive, "banknote " + std::to_string(spec.banknote), spec.banknote);
    for (std::size_t i = 1; i < spec.coins.size(); ++i)
        if (spec.coins[i] >= spec.coins[i - 1])
            fail(errc::non_descending, "coins must be strictly descending at index " + std::to_string(i));
    if (spec.banknote <= spec.coins.front())
        fail(errc::banknote_too_small,
             "banknote " + std::to_string(spec.banknote) + " must exceed the largest coin",
             spec.banknote);

    const Money g = coin_gcd(spec);
    if (spec.banknote % g != 0)
        fail(errc::gcd_violation,
             "banknote " + std::to_string(spec.banknote) + " is not a multiple of coin gcd " + std::to_string(g),
             spec.banknote);

    // Reachability of every multiple of g in [0, banknote), on the g-scaled lattice.
    const Money units = spec.banknote / g;
    std::vector<char> reachable(static_cast<std::size_t>(units), 0);
    reachable[0] = 1;
    for (Money u = 1; u < units; ++u) {
        for (Money c : spec.coins) {
            const Money cu = c / g;
            if (cu <= u && reachable[static_cast<std::size_t>(u - cu)]) {
                reachable[static_cast<std::size_t>(u)] = 1;
                break;
            }
        }
        if (!reachable[static_cast<std::size_t>(u)])
            fail(errc::unrepresentable_amount,
                 "amount " + std::to_string(u * g) + " cannot be formed from the coins", u * g);
    }
    return spec;
}

inline CurrencyClass classify(const CurrencySpec& spec) {
    CurrencyClass cls;
    cls.gcd = coin_gcd(spec);
    cls.multiplicable = spec.banknote % spec.coins.front() == 0;
    for (std::size_t i = 1; cls.multiplicable && i < spec.coins.size(); ++i)
        cls.multiplicable = spec.coins[i - 1] % spec.coins[i] == 0;
    if (cls.multiplicable) {
        const Money r = spec.banknote / spec.coins.front();
        bool geometric = true;
        for (std::size_t i = 1; i < spec.coins.size(); ++i)
            geometric = geometric && spec.coins[i - 1] / spec.coins[i] == r;
        if (geometric && r >= 2) cls.geometric_ratio = r;
    }
    return cls;
}

/// Per-level denomination ratios for a multiplicable currency, largest level
/// first: banknote/coins[0], coins[0]/coins[1], ..., coins[n-2]/coins[n-1].
inline std::vector<Money> level_ratios(const CurrencySpec& spec) {
    if (!classify(spec).multiplicable)
        fail(errc::not_multiplicable, "level ratios need a multiplicable currency: " + spec.name);
    std::vector<Money> ratios;
    ratios.reserve(spec.coins.size());
    ratios.push_back(spec.banknote / spec.coins.front());
    for (std::size_t i = 1; i < spec.coins.size(); ++i)
        ratios.push_back(spec.coins[i - 1] / spec.coins[i]);
    return ratios;
}

inline CurrencySpec geometric_currency(Money ratio, int levels) {
    if (ratio < 2 || ratio > 1000)
        fail(errc::out_of_range, "geometric ratio must be in [2, 1000]", ratio);
    if (levels < 1 || levels > 40)
        fail(errc::out_of_range, "geometric level count must be in [1, 40]", levels);
    Money value = 1;
    std::vector<Money> coins;
    for (int i = 0; i < levels; ++i) {
        coins.insert(coins.begin(), value);
        if (value > (1ll << 40) / ratio)
            fail(errc::out_of_range, "geometric currency overflows the supported range", ratio);
        value *= ratio;
    }
    CurrencySpec spec;
    spec.name = "GEOMETRIC(" + std::to_string(ratio) + "," + std::to_string(levels) + ")";
    spec.coins = std::move(coins);
    spec.banknote = value;
    return spec;
}

inline CurrencySpec binary_currency(int levels) {
    CurrencySpec spec = geometric_currency(2, levels);
    spec.name = "BINARY(" + std::to_string(levels) + ")";
    return spec;
}

namespace detail {

inline bool parse_call(std::string_view text, std::string_view head, std::vector<Money>& args) {
    if (text.size() < head.size() + 2 || text.substr(0, head.size()) != head) return false;
    if (text[head.size()] != '(' || text.back() != ')') return false;
    std::string_view body = text.substr(head.size() + 1, text.size() - head.size() - 2);
    args.clear();
    Money value = 0;
    bool have_digit = false;
    for (char ch : body) {
        if (ch >= '0' && ch <= '9') {
            value = value * 10 + (ch - '0');
            have_digit = true;
        } else if (ch == ',' && have_digit) {
            args.push_back(value);
            value = 0;
            have_digit = false;
        } else {
            return false;
        }
    }
    if (!have_digit) return false;
    args.push_back(value);
    return true;
}

}  // namespace detail

/// Built-in currencies. Names: JPY, KRW, USD, SEK, MODEL6, BINARY(n),
/// GEOMETRIC(r,n). SEK is expressed in 50-ore units so that all
/// denominations stay integral.
inline CurrencySpec builtin(std::string_view name) {
    std::string key(name);
    for (char& ch : key)
        if (ch >= 'a' && ch <= 'z') ch -= 'a' - 'A';

    auto make = [](std::string n, std::vector<Money> coins, Money banknote) {
        CurrencySpec spec;
        spec.name = std::move(n);
        spec.coins = std::move(coins);
        spec.banknote = banknote;
        return spec;
    };

    if (key == "JPY") return make("JPY", {500, 100, 50, 10, 5, 1}, 1000);
    if (key == "KRW") return make("KRW", {500, 100, 50, 10, 5, 1}, 1000);
    if (key == "USD") return make("USD", {50, 25, 10, 5, 1}, 100);
    if (key == "SEK") return make("SEK", {20, 10, 2, 1}, 40);
    if (key == "MODEL6") return make("MODEL6", {6, 2, 1}, 12);

    std::vector<Money> args;
    if (detail::parse_call(key, "BINARY", args) && args.size() == 1)
        return binary_currency(static_cast<int>(args[0]));
    if (detail::parse_call(key, "GEOMETRIC", args) && args.size() == 2)
        return geometric_currency(args[0], static_cast<int>(args[1]));

    fail(errc::unknown_currency, "no built-in currency named '" + std::string(name) + "'");
}

}  // namespace minpay
