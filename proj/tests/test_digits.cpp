#include <catch_amalgamated.hpp>

#include "ecf/digits.hpp"

using ecf::Int;
using ecf::Rational;

TEST_CASE("decimal truncation") {
    CHECK(ecf::decimal_truncate(ecf::make_rational(19, 7), 4) == "2.7142");
    CHECK(ecf::decimal_truncate(ecf::make_rational(87, 32), 6) == "2.718750");
    CHECK(ecf::decimal_truncate(Rational(3), 3) == "3.000");
    CHECK(ecf::decimal_truncate(ecf::make_rational(1, 1000), 5) == "0.00100");
}

TEST_CASE("first digits of e") {
    CHECK(ecf::e_decimal(1).digits == "2.7");
    CHECK(ecf::e_decimal(4).digits == "2.7183");
    CHECK(ecf::e_by_taylor(1).digits == "2.7");
    CHECK(ecf::e_by_taylor(4).digits == "2.7183");
    CHECK(ecf::e_decimal(15).digits == "2.718281828459045");
}

TEST_CASE("certified bounds stay below the last digit") {
    for (std::size_t d : {1u, 2u, 5u, 20u, 50u, 200u}) {
        for (const auto& res : {ecf::e_decimal(d), ecf::e_by_taylor(d)}) {
            Rational limit = ecf::make_rational(Int(1), ecf::pow_int(Int(10), d));
            CHECK(res.bound < limit);
            CHECK(res.digits.size() == d + 2);
        }
    }
}

TEST_CASE("both methods agree digit for digit") {
    for (std::size_t d : {1u, 7u, 42u, 200u, 1000u})
        CHECK(ecf::e_decimal(d).digits == ecf::e_by_taylor(d).digits);
}

TEST_CASE("truncated internal strings are prefix-monotone") {
    // assert on truncated digits; rounded output may differ at a boundary
    auto conv = ecf::convergents(ecf::e_term, 100);
    Rational v = conv[99].value();
    std::string longest = ecf::decimal_truncate(v, 60);
    for (std::size_t d = 1; d < 60; ++d)
        CHECK(longest.compare(0, d + 2, ecf::decimal_truncate(v, d)) == 0);
}

TEST_CASE("benchmark requires agreement and records both methods") {
    auto report = ecf::benchmark(100);
    CHECK(report.records.size() == 2);
    CHECK(report.records[0].method == "convergents");
    CHECK(report.records[1].method == "taylor");
    CHECK(report.digits.size() == 102);
    for (const auto& rec : report.records) {
        CHECK(rec.terms > 0);
        CHECK(rec.digits_agreed == 100);
    }
}

TEST_CASE("convergent depth matches the certified threshold") {
    // e_decimal(100) must pick the smallest n with 3/(4^n n! q_3n) < 10^-105
    auto res = ecf::e_decimal(100);
    std::size_t n = res.terms_used / 3;
    auto conv = ecf::convergents(ecf::e_term, 3 * n + 1);
    Rational target = ecf::make_rational(Int(1), ecf::pow_int(Int(10), 105));
    CHECK(ecf::hermite_bound(n) / Rational(conv[3 * n].q) < target);
    if (n > 1)
        CHECK_FALSE(ecf::hermite_bound(n - 1) / Rational(conv[3 * (n - 1)].q) < target);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(ecf::e_decimal(0), std::invalid_argument);
    CHECK_THROWS_AS(ecf::e_by_taylor(0), std::invalid_argument);
}
