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

#include "riordan/series.hpp"

#include <algorithm>
#include <sstream>

#include "riordan/errors.hpp"

namespace riordan
{

namespace
{

std::size_t idx(int n)
{
    return static_cast<std::size_t>(n);
}

// Internal only: extends a series with zero coefficients. Used by Newton
// iteration where the extra coefficients are subsequently corrected.
PowerSeries padded(const PowerSeries &f, int order)
{
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
    c.resize(idx(order + 1));
    return PowerSeries(std::move(c));
}

} // namespace

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        raise(ErrorCode::InvalidArgument, "a power series needs at least one coefficient");
    }
}

PowerSeries PowerSeries::zero(int order)
{
    if (order < 0) {
        raise(ErrorCode::InvalidArgument, "negative truncation order");
    }
    return PowerSeries(std::vector<Rational>(idx(order + 1)));
}

PowerSeries PowerSeries::constant(const Rational &c, int order)
{
    auto s = zero(order);
    s.coeffs_[0] = c;
    return s;
}

PowerSeries PowerSeries::monomial(const Rational &c, int degree, int order)
{
    if (degree < 0) {
        raise(ErrorCode::InvalidArgument, "negative monomial degree");
    }
    auto s = zero(order);
    if (degree <= order) {
        s.coeffs_[idx(degree)] = c;
    }
    return s;
}

PowerSeries PowerSeries::truncate(int new_order) const
{
    if (new_order > order()) {
        raise(ErrorCode::OrderExceeded,
              "cannot extend a series of order " + std::to_string(order()) + " to order " + std::to_string(new_order));
    }
    if (new_order < 0) {
        raise(ErrorCode::InvalidArgument, "negative truncation order");
    }
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

int PowerSeries::valuation() const noexcept
{
    for (int n = 0; n <= order(); ++n) {
        if (!coeffs_[idx(n)].is_zero()) {
            return n;
        }
    }
    return -1;
}

PowerSeries add(const PowerSeries &a, const PowerSeries &b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(idx(n + 1));
    for (int i = 0; i <= n; ++i) {
        c[idx(i)] = a[i] + b[i];
    }
    return PowerSeries(std::move(c));
}

PowerSeries sub(const PowerSeries &a, const PowerSeries &b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(idx(n + 1));
    for (int i = 0; i <= n; ++i) {
        c[idx(i)] = a[i] - b[i];
    }
    return PowerSeries(std::move(c));
}

PowerSeries negate(const PowerSeries &a)
{
    std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
    for (auto &x : c) {
        x = -x;
    }
    return PowerSeries(std::move(c));
}

PowerSeries scale(const PowerSeries &a, const Rational &k)
{
    std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
    for (auto &x : c) {
        x *= k;
    }
    return PowerSeries(std::move(c));
}

PowerSeries mul(const PowerSeries &a, const PowerSeries &b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(idx(n + 1));
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            if (!b[j].is_zero()) {
                c[idx(i + j)].add_product(a[i], b[j]);
            }
        }
    }
    return PowerSeries(std::move(c));
}

PowerSeries div(const PowerSeries &a, const PowerSeries &b)
{
    if (b[0].is_zero()) {
        raise(ErrorCode::NonUnitDivisor, "divisor has zero constant term");
    }
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> q(idx(n + 1));
    const Rational inv = Rational(1) / b[0];
    for (int i = 0; i <= n; ++i) {
        Rational acc = a[i];
        for (int j = 1; j <= i; ++j) {
            if (!b[j].is_zero()) {
                acc.add_product(-b[j], q[idx(i - j)]);
            }
        }
        q[idx(i)] = acc * inv;
    }
    return PowerSeries(std::move(q));
}

PowerSeries compose(const PowerSeries &f, const PowerSeries &g)
{
    if (!g[0].is_zero()) {
        raise(ErrorCode::NonzeroConstantTerm, "inner series of a composition must vanish at 0");
    }
    const int n = std::min(f.order(), g.order());
    const auto inner = g.truncate(n);
    auto acc = PowerSeries::constant(f[n], n);
    for (int i = n - 1; i >= 0; --i) {
        acc = mul(acc, inner);
        std::vector<Rational> c(acc.coeffs().begin(), acc.coeffs().end());
        c[0] += f[i];
        acc = PowerSeries(std::move(c));
    }
    return acc;
}

PowerSeries revert(const PowerSeries &f)
{
    if (f.order() < 1 || !f[0].is_zero() || f[1].is_zero()) {
        raise(ErrorCode::NotRevertible, "reversion needs f(0) = 0 and f'(0) != 0");
    }
    const int n = f.order();
    const auto df = derive(f);
    // h is exact through t^prec.
    auto h = PowerSeries::monomial(Rational(1) / f[1], 1, 1);
    int prec = 1;
    while (prec < n) {
        const int next = std::min(2 * prec + 1, n);
        const auto hn = padded(h, next);
        const auto residual = compose(f.truncate(next), hn) - PowerSeries::t(next);
        const auto slope = compose(df.truncate(next - 1), hn.truncate(next - 1));
        // residual = O(t^{prec+1}) and slope is a unit, so the correction is
        // computed at full order `next` once the slope is known to next - 1.
        const auto correction = shift(div(shift(residual, -1), slope), 1);
        h = hn - correction;
        prec = next;
    }
    return h;
}

PowerSeries derive(const PowerSeries &f)
{
    if (f.order() < 1) {
        raise(ErrorCode::OrderExceeded, "derivative of an order-0 series is unknown");
    }
    std::vector<Rational> c(idx(f.order()));
    for (int i = 1; i <= f.order(); ++i) {
        c[idx(i - 1)] = f[i] * Rational(i);
    }
    return PowerSeries(std::move(c));
}

PowerSeries pow_int(const PowerSeries &f, long k)
{
    if (k < 0) {
        if (f[0].is_zero()) {
            raise(ErrorCode::NonUnitDivisor, "negative power of a non-unit series");
        }
        return pow_int(div(PowerSeries::constant(Rational(1), f.order()), f), -k);
    }
    auto result = PowerSeries::constant(Rational(1), f.order());
    auto base = f;
    while (k > 0) {
        if (k & 1) {
            result = mul(result, base);
        }
        k >>= 1;
        if (k > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

PowerSeries pow_rational(const PowerSeries &f, long num, long den)
{
    if (den <= 0) {
        raise(ErrorCode::InvalidArgument, "rational exponent needs a positive denominator");
    }
    if (f[0] != Rational(1)) {
        raise(ErrorCode::NonUnitConstant, "rational power needs constant term 1, got " + f[0].str());
    }
    const int n = f.order();
    std::vector<Rational> g(idx(n + 1));
    g[0] = Rational(1);
    const Rational q_num(num);
    const Rational q_den(den);
    // den * f * g' = num * f' * g, coefficient of t^{m-1}:
    // g_m = 1/(m den) * sum_{j=1..m} f_j g_{m-j} (num j - den (m - j)).
    for (int m = 1; m <= n; ++m) {
        Rational acc;
        for (int j = 1; j <= m; ++j) {
            if (f[j].is_zero()) {
                continue;
            }
            const Rational w = q_num * Rational(j) - q_den * Rational(m - j);
            acc.add_product(f[j] * w, g[idx(m - j)]);
        }
        g[idx(m)] = acc / (Rational(m) * q_den);
    }
    return PowerSeries(std::move(g));
}

const Coefficient &coeff(const PowerSeries &f, int n)
{
    if (n < 0) {
        raise(ErrorCode::InvalidArgument, "negative coefficient index");
    }
    if (n > f.order()) {
        raise(ErrorCode::OrderExceeded,
              "coefficient " + std::to_string(n) + " beyond truncation order " + std::to_string(f.order()));
    }
    return f[n];
}

PowerSeries shift(const PowerSeries &f, int k)
{
    if (k >= 0) {
        std::vector<Rational> c(idx(k));
        c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
        return PowerSeries(std::move(c));
    }
    const int drop = -k;
    if (drop > f.order()) {
        raise(ErrorCode::NotDivisibleByT, "dividing by t^" + std::to_string(drop) + " leaves no known coefficients");
    }
    for (int i = 0; i < drop; ++i) {
        if (!f[i].is_zero()) {
            raise(ErrorCode::NotDivisibleByT,
                  "coefficient of t^" + std::to_string(i) + " is " + f[i].str() + ", cannot divide by t^" +
                      std::to_string(drop));
        }
    }
    return PowerSeries(std::vector<Rational>(f.coeffs().begin() + drop, f.coeffs().end()));
}

bool agree(const PowerSeries &a, const PowerSeries &b)
{
    const int n = std::min(a.order(), b.order());
    for (int i = 0; i <= n; ++i) {
        if (a[i] != b[i]) {
            return false;
        }
    }
    return true;
}

std::string to_string(const PowerSeries &f)
{
    std::ostringstream os;
    for (int i = 0; i <= f.order(); ++i) {
        if (i > 0) {
            os << ", ";
        }
        os << f[i];
    }
    return os.str();
}

PowerSeries parse_coefficients(std::string_view text)
{
    std::vector<Rational> c;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        c.push_back(Rational::parse(token));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return PowerSeries(std::move(c));
}

} // namespace riordan
