#pragma once

#include <stdexcept>
#include <string>

namespace minpay {

enum class errc {
    // currency validation
    empty_coin_list,
    non_positive,
    non_descending,
    banknote_too_small,
    gcd_violation,
    unrepresentable_amount,
    unknown_currency,
    bad_currency_file,
    // change making
    out_of_range,
    not_multiple_of_gcd,
    greedy_stuck,
    // payment
    price_negative,
    price_not_multiple_of_gcd,
    // series, plots, grids
    series_too_short,
    not_multiplicable,
    empty_set,
    scale_overflow,
    too_few_steps,
    grid_not_from_rule60,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_coin_list:           return "EmptyCoinList";
        case errc::non_positive:              return "NonPositive";
        case errc::non_descending:            return "NonDescending";
        case errc::banknote_too_small:        return "BanknoteTooSmall";
        case errc::gcd_violation:             return "GcdViolation";
        case errc::unrepresentable_amount:    return "UnrepresentableAmount";
        case errc::unknown_currency:          return "UnknownCurrency";
        case errc::bad_currency_file:         return "BadCurrencyFile";
        case errc::out_of_range:              return "OutOfRange";
        case errc::not_multiple_of_gcd:       return "NotMultipleOfGcd";
        case errc::greedy_stuck:              return "GreedyStuck";
        case errc::price_negative:            return "PriceNegative";
        case errc::price_not_multiple_of_gcd: return "PriceNotMultipleOfGcd";
        case errc::series_too_short:          return "SeriesTooShort";
        case errc::not_multiplicable:         return "NotMultiplicable";
        case errc::empty_set:                 return "EmptySet";
        case errc::scale_overflow:            return "ScaleOverflow";
        case errc::too_few_steps:             return "TooFewSteps";
        case errc::grid_not_from_rule60:      return "GridNotFromRule60";
    }
    return "Unknown";
}

/// Domain error carrying a machine-checkable code and, where it helps,
/// the offending amount (e.g. the first unrepresentable value).
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg, long long detail = 0)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
          code_(code),
          detail_(detail) {}

    errc code() const { return code_; }
    long long detail() const { return detail_; }

private:
    errc code_;
    long long detail_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg, long long detail = 0) {
    throw Error(code, msg, detail);
}

}  // namespace minpay
