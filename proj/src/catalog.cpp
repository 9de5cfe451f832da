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

#include "riordan/catalog.hpp"

#include <charconv>

#include "riordan/errors.hpp"

namespace riordan::catalog
{

namespace
{

PowerSeries from_formula(int order, const std::function<Rational(int)> &c)
{
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(order + 1));
    for (int n = 0; n <= order; ++n) {
        v.push_back(c(n));
    }
    return PowerSeries(std::move(v));
}

PowerSeries one_minus_4t(int order)
{
    std::vector<Rational> v(static_cast<std::size_t>(order + 1));
    v[0] = Rational(1);
    if (order >= 1) {
        v[1] = Rational(-4);
    }
    return PowerSeries(std::move(v));
}

} // namespace

PowerSeries catalan(int order)
{
    return from_formula(order, [](int n) { return binomial(2 * n, n) / Rational(n + 1); });
}

PowerSeries catalan_via_sqrt(int order)
{
    // (1 - sqrt(1 - 4t)) / (2t) loses one order to the division by t.
    const auto root = pow_rational(one_minus_4t(order + 1), 1, 2);
    const auto num = sub(PowerSeries::constant(1, order + 1), root);
    return scale(shift(num, -1), Rational(1, 2));
}

PowerSeries central_binomial(int order)
{
    return from_formula(order, [](int n) { return binomial(2 * n, n); });
}

PowerSeries central_binomial_via_sqrt(int order)
{
    return pow_rational(one_minus_4t(order), -1, 2);
}

PowerSeries fibonacci(int order)
{
    return from_formula(order, [](int n) { return fibonacci_number(n); });
}

Rational fibonacci_number(int n)
{
    if (n < 0) {
        return Rational(0);
    }
    mpz_class a = 1, b = 1;
    for (int i = 0; i < n; ++i) {
        mpz_class c = a + b;
        a = b;
        b = c;
    }
    return Rational(a);
}

PowerSeries fuss_catalan(int m, int order)
{
    return fuss_catalan_power(m, Rational(1), order);
}

PowerSeries fuss_catalan_power(int m, const Rational &r, int order)
{
    if (m < 0) {
        raise(ErrorCode::InvalidArgument, "Fuss-Catalan order m must be nonnegative");
    }
    return from_formula(order, [&](int n) {
        if (n == 0) {
            return Rational(1);
        }
        const Rational top = Rational(m) * Rational(n) + r;
        Rational acc = r;
        for (int i = 1; i < n; ++i) {
            acc *= top - Rational(i);
        }
        return acc / factorial(n);
    });
}

PowerSeries fuss_catalan_power_via_root(int m, const Rational &r, int order)
{
    const auto num = r.numerator();
    const auto den = r.denominator();
    if (!num.fits_slong_p() || !den.fits_slong_p()) {
        raise(ErrorCode::InvalidArgument, "exponent too large");
    }
    return pow_rational(fuss_catalan(m, order), num.get_si(), den.get_si());
}

PowerSeries ternary(int order)
{
    return fuss_catalan(3, order);
}

RiordanArray pascal(int order)
{
    const auto one_minus_t = sub(PowerSeries::constant(1, order), PowerSeries::t(order));
    return RiordanArray(div(PowerSeries::constant(1, order), one_minus_t), div(PowerSeries::t(order), one_minus_t));
}

RiordanArray delannoy(int order)
{
    const auto one_minus_t = sub(PowerSeries::constant(1, order), PowerSeries::t(order));
    const auto g = div(PowerSeries::constant(1, order), one_minus_t);
    const auto t_one_plus_t = add(PowerSeries::t(order), PowerSeries::monomial(1, 2, order));
    return RiordanArray(g, div(t_one_plus_t, one_minus_t));
}

RiordanArray fibonacci_catalan_array(int order)
{
    const auto denom = sub(sub(PowerSeries::constant(1, order), PowerSeries::t(order)), PowerSeries::monomial(1, 2, order));
    return RiordanArray(div(PowerSeries::constant(1, order), denom), shift(catalan(order - 1), 1));
}

RiordanArray catalan_array(int order)
{
    return RiordanArray(catalan(order), shift(catalan(order - 1), 1));
}

Rational pascal_entry(int n, int k)
{
    return k > n ? Rational(0) : binomial(n, k);
}

Rational delannoy_entry(int n, int k)
{
    // t^k (1+t)^k / (1-t)^{k+1}
    Rational s;
    for (int j = 0; j <= k && j <= n - k; ++j) {
        s += binomial(k, j) * binomial(n - j, k);
    }
    return s;
}

Rational catalan_power_coeff(int k, int j)
{
    if (k == 0) {
        return Rational(j == 0 ? 1 : 0);
    }
    return Rational(k, 2 * j + k) * binomial(2 * j + k, j);
}

Rational fibonacci_catalan_entry(int n, int k)
{
    Rational s;
    for (int j = 0; j <= n - k; ++j) {
        s += fibonacci_number(n - k - j) * catalan_power_coeff(k, j);
    }
    return s;
}

Rational catalan_array_entry(int n, int k)
{
    if (k > n) {
        return Rational(0);
    }
    return Rational(k + 1, 2 * n - k + 1) * binomial(2 * n - k + 1, n - k);
}

const std::vector<ArrayEntry> &arrays()
{
    static const std::vector<ArrayEntry> entries{
        {"pascal", pascal, pascal_entry},
        {"delannoy", delannoy, delannoy_entry},
        {"fib-catalan", fibonacci_catalan_array, fibonacci_catalan_entry},
        {"catalan-array", catalan_array, catalan_array_entry},
    };
    return entries;
}

const std::vector<SeriesEntry> &series()
{
    static const std::vector<SeriesEntry> entries{
        {"catalan", catalan},
        {"central-binomial", central_binomial},
        {"ternary", ternary},
    };
    return entries;
}

const ArrayEntry &array_by_name(std::string_view name)
{
    for (const auto &e : arrays()) {
        if (e.name == name) {
            return e;
        }
    }
    raise(ErrorCode::UnknownName, "no catalog array named '" + std::string(name) + "'");
}

namespace
{

bool parse_fuss(std::string_view name, int &m)
{
    constexpr std::string_view prefix = "fuss:";
    if (name.substr(0, prefix.size()) != prefix) {
        return false;
    }
    const auto digits = name.substr(prefix.size());
    if (digits.empty()) {
        return false;
    }
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    return ec == std::errc() && ptr == digits.data() + digits.size() && m >= 0;
}

} // namespace

PowerSeries series_by_name(std::string_view name, int order)
{
    for (const auto &e : series()) {
        if (e.name == name) {
            return e.build(order);
        }
    }
    int m = 0;
    if (parse_fuss(name, m)) {
        return fuss_catalan(m, order);
    }
    raise(ErrorCode::UnknownName, "no catalog series named '" + std::string(name) + "'");
}

bool is_array_name(std::string_view name)
{
    for (const auto &e : arrays()) {
        if (e.name == name) {
            return true;
        }
    }
    return false;
}

bool is_series_name(std::string_view name)
{
    for (const auto &e : series()) {
        if (e.name == name) {
            return true;
        }
    }
    int m = 0;
    return parse_fuss(name, m);
}

} // namespace riordan::catalog
