#pragma once

// Reference implementations for the tests, written independently of the
// library's algorithms so every cross-check compares two separate codings.

#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <minpay/currency.hpp>
#include <minpay/error.hpp>

namespace oracle {

/// Fewest coins for every value 0..limit by breadth-first search over coin
/// additions; -1 marks unreachable values. Independent of the library's
/// table construction.
inline std::vector<int> bfs_min_coins(const std::vector<minpay::Money>& coins, minpay::Money limit) {
    std::vector<int> dist(static_cast<std::size_t>(limit) + 1, -1);
    dist[0] = 0;
    std::vector<minpay::Money> frontier{0};
    while (!frontier.empty()) {
        std::vector<minpay::Money> next;
        for (minpay::Money v : frontier)
            for (minpay::Money c : coins) {
                const minpay::Money w = v + c;
                if (w <= limit && dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    next.push_back(w);
                }
            }
        frontier = std::move(next);
    }
    return dist;
}

/// Digit expansion by successive division, largest denomination first. For a
/// divisibility-chain currency this is the unique bounded digit vector.
inline std::vector<int> division_digits(minpay::Money amount, const std::vector<minpay::Money>& coins) {
    std::vector<int> digits;
    digits.reserve(coins.size());
    for (minpay::Money c : coins) {
        digits.push_back(static_cast<int>(amount / c));
        amount %= c;
    }
    return digits;
}

/// Exact binomial coefficient C(t, k) reduced mod r, via arbitrary-precision
/// integers; exact for every size the tests use.
inline long long binomial_mod(int t, int k, long long r) {
    namespace mp = boost::multiprecision;
    if (k < 0 || k > t) return 0;
    mp::cpp_int value = 1;
    for (int i = 0; i < k; ++i) {
        value *= t - i;
        value /= i + 1;  // exact: value is C(t, i+1) times an integer at this point
    }
    return static_cast<long long>(value % r);
}

/// C(t, k) is odd exactly when the base-2 additions of k and t-k carry nowhere.
inline bool binomial_is_odd(long long t, long long k) {
    return (k & (t - k)) == 0;
}

/// Runs f, which must throw a domain error, and returns its code.
template <class F>
minpay::errc error_code_of(F&& f) {
    try {
        std::forward<F>(f)();
    } catch (const minpay::Error& e) {
        return e.code();
    }
    throw std::runtime_error("expected a domain error, none was thrown");
}

}  // namespace oracle
