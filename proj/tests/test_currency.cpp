#include <catch2/catch_amalgamated.hpp>

#include <minpay/currency.hpp>

#include "oracles.hpp"

using namespace minpay;
using oracle::error_code_of;

namespace {
CurrencySpec make(std::string name, std::vector<Money> coins, Money banknote) {
    CurrencySpec spec;
    spec.name = std::move(name);
    spec.coins = std::move(coins);
    spec.banknote = banknote;
    return spec;
}
}  // namespace

TEST_CASE("built-in currencies carry the documented denominations") {
    const CurrencySpec jpy = builtin("JPY");
    CHECK(jpy.coins == std::vector<Money>{500, 100, 50, 10, 5, 1});
    CHECK(jpy.banknote == 1000);

    const CurrencySpec krw = builtin("KRW");
    CHECK(krw.coins == std::vector<Money>{500, 100, 50, 10, 5, 1});
    CHECK(krw.banknote == 1000);

    const CurrencySpec usd = builtin("USD");
    CHECK(usd.coins == std::vector<Money>{50, 25, 10, 5, 1});
    CHECK(usd.banknote == 100);

    // Half-unit scaling: ore values doubled so every denomination is integral.
    const CurrencySpec sek = builtin("SEK");
    CHECK(sek.coins == std::vector<Money>{20, 10, 2, 1});
    CHECK(sek.banknote == 40);

    const CurrencySpec model6 = builtin("MODEL6");
    CHECK(model6.coins == std::vector<Money>{6, 2, 1});
    CHECK(model6.banknote == 12);
}

TEST_CASE("built-in lookup ignores case") {
    CHECK(builtin("jpy") == builtin("JPY"));
    CHECK(builtin("model6") == builtin("MODEL6"));
    CHECK(builtin("binary(3)") == builtin("BINARY(3)"));
}

TEST_CASE("parameterized currency families") {
    const CurrencySpec b4 = builtin("BINARY(4)");
    CHECK(b4.coins == std::vector<Money>{8, 4, 2, 1});
    CHECK(b4.banknote == 16);
    CHECK(b4.name == "BINARY(4)");

    const CurrencySpec g34 = builtin("GEOMETRIC(3,4)");
    CHECK(g34.coins == std::vector<Money>{27, 9, 3, 1});
    CHECK(g34.banknote == 81);

    CHECK(builtin("BINARY(1)").banknote == 2);
    CHECK(builtin("GEOMETRIC(10,2)").coins == std::vector<Money>{10, 1});
}

TEST_CASE("unknown currency names are rejected") {
    CHECK(error_code_of([] { builtin("EUR"); }) == errc::unknown_currency);
    CHECK(error_code_of([] { builtin(""); }) == errc::unknown_currency);
    CHECK(error_code_of([] { builtin("BINARY"); }) == errc::unknown_currency);
    CHECK(error_code_of([] { builtin("BINARY(2,3)"); }) == errc::unknown_currency);
    CHECK(error_code_of([] { builtin("GEOMETRIC(x,1)"); }) == errc::unknown_currency);
}

TEST_CASE("validation accepts every built-in") {
    for (const char* name : {"JPY", "KRW", "USD", "SEK", "MODEL6", "BINARY(6)", "GEOMETRIC(5,3)"}) {
        const CurrencySpec spec = validate(builtin(name));
        CHECK(spec == builtin(name));
    }
}

TEST_CASE("validation rejects malformed descriptions") {
    CHECK(error_code_of([] { validate(make("x", {}, 10)); }) == errc::empty_coin_list);
    CHECK(error_code_of([] { validate(make("x", {5, 0, 1}, 10)); }) == errc::non_positive);
    CHECK(error_code_of([] { validate(make("x", {5, -2, 1}, 10)); }) == errc::non_positive);
    CHECK(error_code_of([] { validate(make("x", {5, 1}, 0)); }) == errc::non_positive);
    CHECK(error_code_of([] { validate(make("x", {5, 5, 1}, 10)); }) == errc::non_descending);
    CHECK(error_code_of([] { validate(make("x", {1, 5}, 10)); }) == errc::non_descending);
    CHECK(error_code_of([] { validate(make("x", {5, 1}, 5)); }) == errc::banknote_too_small);
    CHECK(error_code_of([] { validate(make("x", {5, 1}, 3)); }) == errc::banknote_too_small);
    CHECK(error_code_of([] { validate(make("x", {4, 2}, 9)); }) == errc::gcd_violation);
}

TEST_CASE("validation pinpoints the first amount no coins can form") {
    try {
        validate(make("x", {5, 3}, 15));
        FAIL("expected a domain error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::unrepresentable_amount);
        CHECK(e.detail() == 1);
    }
    try {
        validate(make("x", {6, 4}, 12));  // gcd 2, but 2 itself is unreachable
        FAIL("expected a domain error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::unrepresentable_amount);
        CHECK(e.detail() == 2);
    }
    // Same shapes with a unit / pair coin added pass.
    CHECK_NOTHROW(validate(make("x", {5, 3, 1}, 15)));
    CHECK_NOTHROW(validate(make("x", {6, 4, 2}, 12)));
}

TEST_CASE("classification flags divisibility chains and constant ratios") {
    const CurrencyClass jpy = classify(builtin("JPY"));
    CHECK(jpy.multiplicable);
    CHECK_FALSE(jpy.geometric_ratio.has_value());
    CHECK(jpy.gcd == 1);

    const CurrencyClass usd = classify(builtin("USD"));
    CHECK_FALSE(usd.multiplicable);  // 10 does not divide 25
    CHECK_FALSE(usd.geometric_ratio.has_value());

    CHECK(classify(builtin("SEK")).multiplicable);
    CHECK(classify(builtin("MODEL6")).multiplicable);
    CHECK_FALSE(classify(builtin("MODEL6")).geometric_ratio.has_value());

    const CurrencyClass b5 = classify(builtin("BINARY(5)"));
    CHECK(b5.multiplicable);
    REQUIRE(b5.geometric_ratio.has_value());
    CHECK(*b5.geometric_ratio == 2);

    const CurrencyClass g7 = classify(builtin("GEOMETRIC(7,2)"));
    REQUIRE(g7.geometric_ratio.has_value());
    CHECK(*g7.geometric_ratio == 7);

    CHECK(classify(make("x", {50, 20, 10}, 100)).gcd == 10);
}

TEST_CASE("every constant-ratio family member is classified with its ratio") {
    for (int r = 2; r <= 10; ++r) {
        for (int n = 1; n <= 8; ++n) {
            const std::string name = "GEOMETRIC(" + std::to_string(r) + "," + std::to_string(n) + ")";
            INFO(name);
            const CurrencyClass cls = classify(builtin(name));
            REQUIRE(cls.multiplicable);
            REQUIRE(cls.geometric_ratio.has_value());
            REQUIRE(*cls.geometric_ratio == r);
        }
    }
}

TEST_CASE("level ratios of multiplicable currencies") {
    CHECK(level_ratios(builtin("JPY")) == std::vector<Money>{2, 5, 2, 5, 2, 5});
    CHECK(level_ratios(builtin("MODEL6")) == std::vector<Money>{2, 3, 2});
    CHECK(level_ratios(builtin("SEK")) == std::vector<Money>{2, 2, 5, 2});
    CHECK(level_ratios(builtin("BINARY(4)")) == std::vector<Money>{2, 2, 2, 2});
    CHECK(error_code_of([] { level_ratios(builtin("USD")); }) == errc::not_multiplicable);
}

TEST_CASE("geometric constructor rejects out-of-range shapes") {
    CHECK(error_code_of([] { geometric_currency(1, 3); }) == errc::out_of_range);
    CHECK(error_code_of([] { geometric_currency(1001, 2); }) == errc::out_of_range);
    CHECK(error_code_of([] { geometric_currency(3, 0); }) == errc::out_of_range);
    CHECK(error_code_of([] { geometric_currency(3, 41); }) == errc::out_of_range);
    CHECK(error_code_of([] { geometric_currency(1000, 7); }) == errc::out_of_range);
    CHECK(geometric_currency(2, 12).banknote == 4096);
}

TEST_CASE("coin gcd") {
    CHECK(coin_gcd(builtin("JPY")) == 1);
    CHECK(coin_gcd(make("x", {50, 20, 10}, 100)) == 10);
    CHECK(coin_gcd(make("x", {6, 4}, 12)) == 2);
}
