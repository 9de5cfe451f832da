/*
 * Copyright 2026 The riordan-kit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <random>

#include "riordan/errors.hpp"
#include "riordan/series.hpp"
#include "support.hpp"

using namespace riordan;
using namespace riordan::testing;

namespace
{

template <typename F>
ErrorCode code_of(F &&f)
{
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("rational basics")
{
    CHECK(Rational(6, 4) == Rational::parse("3/2"));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational::parse(" -12 ").str() == "-12");
    CHECK(code_of([] { return Rational(1) / Rational(0); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { return Rational::parse("1/0"); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { return Rational::parse("1.5"); }) == ErrorCode::InvalidArgument);
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(3, 5) == Rational(0));
    CHECK(binomial(-1, 3) == Rational(-1));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("add")
{
    CHECK(add(series({1, 1}), series({1, -1})) == series({2, 0}));
    const auto s = series({3, 0, -2, 7});
    CHECK(add(PowerSeries::zero(3), s) == s);
    // orders differ: the result keeps the smaller one
    CHECK(add(series({1, 2, 3}), series({1, 1})) == series({2, 3}));
}

TEST_CASE("mul")
{
    CHECK(mul(series({1, -1, 0, 0, 0, 0}), geometric(5)) == PowerSeries::constant(1, 5));
    CHECK(mul(PowerSeries::t(4), PowerSeries::t(4)) == PowerSeries::monomial(1, 2, 4));

    // C^2 against 2/(2n+2) binom(2n+2, n), catalan from its recurrence
    const int n = 12;
    const auto c = from_values(catalan_recurrence(n + 1));
    const auto c2 = mul(c, c);
    for (int i = 0; i <= n; ++i) {
        CHECK(c2[i] == Rational(2, 2 * i + 2) * binomial(2 * i + 2, i));
    }
}

TEST_CASE("div")
{
    CHECK(div(PowerSeries::constant(1, 8), series({1, -1, 0, 0, 0, 0, 0, 0, 0})) == geometric(8));
    CHECK(div(PowerSeries::t(6), series({1, -1, 0, 0, 0, 0, 0})) == series({0, 1, 1, 1, 1, 1, 1}));
    const auto fib = div(PowerSeries::constant(1, 15), series({1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(values(fib) == fibonacci_recurrence(16));
    CHECK(code_of([] { return div(PowerSeries::constant(1, 3), PowerSeries::t(3)); }) == ErrorCode::NonUnitDivisor);
}

TEST_CASE("compose")
{
    std::mt19937 rng(7);
    const auto f = random_series(rng, 10);
    CHECK(compose(f, PowerSeries::t(10)) == f);

    // 1/(1-z) at z/(1+z) is 1 + z
    const auto geo = geometric(10);
    const auto zb = div(PowerSeries::t(10), series({1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(compose(geo, zb) == series({1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}));

    // 1/(1 - t(1-t)) against direct polynomial expansion
    const auto inner = series({0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0});
    const auto expected = naive_compose(values(geo), values(inner), 10);
    CHECK(values(compose(geo, inner)) == expected);
    CHECK(values(compose(geo, inner)) == ints({1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1}));

    CHECK(code_of([&] { return compose(geo, geo); }) == ErrorCode::NonzeroConstantTerm);
}

TEST_CASE("revert")
{
    const int n = 12;
    const auto pascal_f = shift(geometric(n - 1), 1);
    const auto inv = revert(pascal_f);
    for (int i = 1; i <= n; ++i) {
        CHECK(inv[i] == Rational(i % 2 ? 1 : -1));
    }
    CHECK(inv[0] == Rational(0));
    CHECK(revert(PowerSeries::t(9)) == PowerSeries::t(9));

    // t - t^2 reverts to sum C_n t^{n+1}
    const auto r = revert(series({0, 1, -1, 0, 0, 0, 0, 0, 0, 0}));
    const auto cat = catalan_recurrence(10);
    for (int i = 1; i <= 9; ++i) {
        CHECK(r[i] == cat[static_cast<std::size_t>(i - 1)]);
    }
    CHECK(values(r).at(5) == Rational(14));

    CHECK(code_of([] { return revert(series({1, 1, 0})); }) == ErrorCode::NotRevertible);
    CHECK(code_of([] { return revert(series({0, 0, 1})); }) == ErrorCode::NotRevertible);
}

TEST_CASE("derive")
{
    CHECK(derive(series({1, 1, 1})) == series({1, 2}));
    CHECK(derive(PowerSeries::constant(5, 4)) == PowerSeries::zero(3));
    std::vector<Rational> expected;
    for (int i = 0; i < 8; ++i) {
        expected.emplace_back(i + 1);
    }
    CHECK(values(derive(geometric(8))) == expected);
    CHECK(code_of([] { return derive(PowerSeries::constant(1, 0)); }) == ErrorCode::OrderExceeded);
}

TEST_CASE("pow_int")
{
    CHECK(pow_int(series({1, 1, 0, 0, 0, 0, 0}), 5) == series({1, 5, 10, 10, 5, 1, 0}));
    std::mt19937 rng(3);
    const auto f = random_series(rng, 6);
    CHECK(pow_int(f, 0) == PowerSeries::constant(1, 6));

    // (tC)^k has [t^n] = k/(2n-k) binom(2n-k, n-k)
    const int n = 14;
    const auto tc = shift(from_values(catalan_recurrence(n)), 1);
    for (int k = 1; k <= 5; ++k) {
        const auto p = pow_int(tc, k);
        for (int i = 0; i <= n; ++i) {
            const Rational expected = i < k ? Rational(0) : Rational(k, 2 * i - k) * binomial(2 * i - k, i - k);
            CHECK(p[i] == expected);
        }
    }
    CHECK(pow_int(series({1, -1, 0, 0, 0}), -1) == geometric(4));
    CHECK(code_of([] { return pow_int(PowerSeries::t(3), -2); }) == ErrorCode::NonUnitDivisor);
}

TEST_CASE("pow_rational")
{
    const int n = 12;
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    c[0] = Rational(1);
    c[1] = Rational(-4);
    const auto root = pow_rational(PowerSeries(c), 1, 2);
    const auto catalan = shift(sub(PowerSeries::constant(1, n), root), -1);
    const auto scaled = scale(catalan, Rational(1, 2));
    CHECK(values(scaled) == catalan_recurrence(n));

    std::mt19937 rng(11);
    auto f = values(random_series(rng, 10));
    f[0] = Rational(1);
    const PowerSeries fs(f);
    CHECK(pow_rational(fs, 1, 1) == fs);
    CHECK(pow_rational(pow_rational(fs, 1, 3), 3, 1) == fs);
    CHECK(pow_int(pow_rational(fs, -2, 5), 5) == pow_int(fs, -2));
    CHECK(code_of([] { return pow_rational(series({2, 1}), 1, 2); }) == ErrorCode::NonUnitConstant);
}

TEST_CASE("coeff and shift")
{
    CHECK(coeff(geometric(9), 7) == Rational(1));
    CHECK(coeff(PowerSeries::monomial(1, 2, 4), 1) == Rational(0));
    CHECK(coeff(from_values(catalan_recurrence(8)), 5) == Rational(42));
    CHECK(code_of([] { return coeff(geometric(3), 4); }) == ErrorCode::OrderExceeded);

    CHECK(shift(PowerSeries::monomial(1, 2, 5), -1) == PowerSeries::monomial(1, 1, 4));
    CHECK(shift(PowerSeries::constant(1, 3), 2) == PowerSeries::monomial(1, 2, 5));
    CHECK(shift(series({0, 1, 1}), -1) == series({1, 1}));
    CHECK(code_of([] { return shift(series({1, 1}), -1); }) == ErrorCode::NotDivisibleByT);
}

TEST_CASE("ring laws on random series")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> ord(0, 16);
        const auto a = random_series(rng, ord(rng));
        const auto b = random_series(rng, ord(rng));
        const auto c = random_series(rng, ord(rng));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    }
}

TEST_CASE("reversion round trip against the coefficient-solve oracle")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 14)(rng);
        const auto f = random_revertible(rng, n);
        const auto h = revert(f);
        CHECK(h.order() == n);
        CHECK(compose(f, h) == PowerSeries::t(n));
        CHECK(compose(h, f) == PowerSeries::t(n));
        CHECK(values(h) == naive_revert(values(f), n));
    }
}

TEST_CASE("unit division inverts multiplication")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto b = values(random_series(rng, 12));
        if (b[0].is_zero()) {
            b[0] = Rational(2);
        }
        const PowerSeries bs(b);
        CHECK(mul(div(PowerSeries::constant(1, 12), bs), bs) == PowerSeries::constant(1, 12));
    }
}

TEST_CASE("integer and rational powers agree")
{
    std::mt19937 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = values(random_series(rng, 10));
        f[0] = Rational(1);
        const PowerSeries fs(f);
        for (int k = 0; k <= 6; ++k) {
            CHECK(pow_rational(fs, k, 1) == pow_int(fs, k));
        }
    }
}

TEST_CASE("coefficient lists round trip through text")
{
    std::mt19937 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = values(random_series(rng, 8));
        f[3] = f[3] / Rational(7);
        const PowerSeries fs(f);
        const auto text = to_string(fs);
        CHECK(parse_coefficients(text) == fs);
        CHECK(to_string(parse_coefficients(text)) == text);
    }
    CHECK(to_string(series_q({"1", "1", "1/2", "1/6"})) == "1, 1, 1/2, 1/6");
}
