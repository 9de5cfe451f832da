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

#ifndef RIORDAN_SERIES_HPP
#define RIORDAN_SERIES_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan
{

using Coefficient = Rational;

inline constexpr int kDefaultOrder = 24;

// Truncated formal power series c_0 + c_1 t + ... + c_N t^N over the
// rationals. N is the truncation order: the coefficients are exact up to and
// including t^N and nothing is known beyond it. Operations never pad with
// zeros; a result carries the smallest order its inputs guarantee.
class PowerSeries
{
public:
    // The zero series at order 0.
    PowerSeries() : coeffs_(1) {}

    // Order is coeffs.size() - 1; coeffs must be non-empty.
    explicit PowerSeries(std::vector<Rational> coeffs);

    static PowerSeries zero(int order);
    static PowerSeries constant(const Rational &c, int order);
    // c * t^degree, known to the given order.
    static PowerSeries monomial(const Rational &c, int degree, int order);
    // The indeterminate t.
    static PowerSeries t(int order)
    {
        return monomial(Rational(1), 1, order);
    }

    int order() const noexcept
    {
        return static_cast<int>(coeffs_.size()) - 1;
    }

    // Unchecked access; use coeff() for the checked bracket operator.
    const Rational &operator[](int n) const
    {
        return coeffs_[static_cast<std::size_t>(n)];
    }

    std::span<const Rational> coeffs() const noexcept
    {
        return coeffs_;
    }

    // Drop coefficients above new_order (OrderExceeded if new_order > order()).
    PowerSeries truncate(int new_order) const;

    // Index of the first nonzero coefficient, or -1 for the zero series.
    int valuation() const noexcept;

    bool is_zero() const noexcept
    {
        return valuation() < 0;
    }

    friend bool operator==(const PowerSeries &, const PowerSeries &) = default;

private:
    std::vector<Rational> coeffs_;
};

PowerSeries add(const PowerSeries &a, const PowerSeries &b);
PowerSeries sub(const PowerSeries &a, const PowerSeries &b);
PowerSeries negate(const PowerSeries &a);
PowerSeries scale(const PowerSeries &a, const Rational &c);

// Cauchy product.
PowerSeries mul(const PowerSeries &a, const PowerSeries &b);

// a / b for a unit b (NonUnitDivisor when b(0) = 0).
PowerSeries div(const PowerSeries &a, const PowerSeries &b);

// f(g(t)) by Horner evaluation; g(0) must vanish (NonzeroConstantTerm).
PowerSeries compose(const PowerSeries &f, const PowerSeries &g);

// Compositional inverse. Requires f(0) = 0 and f'(0) != 0 (NotRevertible).
// Computed by Newton iteration on f(h) = t, doubling the precision per step.
PowerSeries revert(const PowerSeries &f);

// Termwise derivative; the order drops by one (OrderExceeded at order 0).
PowerSeries derive(const PowerSeries &f);

// f^k. Negative k requires a unit f (NonUnitDivisor).
PowerSeries pow_int(const PowerSeries &f, long k);

// The unique g with g(0) = 1 and g^den = f^num, for f(0) = 1
// (NonUnitConstant otherwise). Solved from den * f * g' = num * f' * g.
PowerSeries pow_rational(const PowerSeries &f, long num, long den);

// [t^n] f, checked against the truncation order.
const Coefficient &coeff(const PowerSeries &f, int n);

// Multiply by t^k (k >= 0) or divide by t^{-k} (k < 0; NotDivisibleByT when
// a nonzero low coefficient would be lost).
PowerSeries shift(const PowerSeries &f, int k);

// True when a and b have equal coefficients up to min(order(a), order(b)).
bool agree(const PowerSeries &a, const PowerSeries &b);

inline PowerSeries operator+(const PowerSeries &a, const PowerSeries &b)
{
    return add(a, b);
}
inline PowerSeries operator-(const PowerSeries &a, const PowerSeries &b)
{
    return sub(a, b);
}
inline PowerSeries operator-(const PowerSeries &a)
{
    return negate(a);
}
inline PowerSeries operator*(const PowerSeries &a, const PowerSeries &b)
{
    return mul(a, b);
}
inline PowerSeries operator*(const Rational &c, const PowerSeries &a)
{
    return scale(a, c);
}
inline PowerSeries operator/(const PowerSeries &a, const PowerSeries &b)
{
    return div(a, b);
}

// Comma separated exact coefficients, e.g. "1, 1, 1/2, 1/6".
std::string to_string(const PowerSeries &f);

// Inverse of to_string(); the order is the number of tokens minus one.
PowerSeries parse_coefficients(std::string_view text);

} // namespace riordan

#endif
