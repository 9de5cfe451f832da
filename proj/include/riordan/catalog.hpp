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

#ifndef RIORDAN_CATALOG_HPP
#define RIORDAN_CATALOG_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/array.hpp"
#include "riordan/series.hpp"

namespace riordan::catalog
{

// C(t) = sum binom(2n,n)/(n+1) t^n, from the coefficient formula.
PowerSeries catalan(int order);
// C(t) = (1 - sqrt(1 - 4t)) / (2t), through pow_rational.
PowerSeries catalan_via_sqrt(int order);

// B(t) = sum binom(2n,n) t^n.
PowerSeries central_binomial(int order);
// B(t) = (1 - 4t)^{-1/2}.
PowerSeries central_binomial_via_sqrt(int order);

// 1 / (1 - t - t^2): 1, 1, 2, 3, 5, ...
PowerSeries fibonacci(int order);

// Fuss-Catalan function F_m, the solution of F = 1 + t F^m (m >= 0).
PowerSeries fuss_catalan(int m, int order);

// F_m^r from Lambert's formula [t^n] = r/(mn+r) binom(mn+r, n), written as
// r (mn+r-1)(mn+r-2)...(mn+r-n+1) / n! so it stays defined when mn + r = 0.
PowerSeries fuss_catalan_power(int m, const Rational &r, int order);
// The same series as pow_rational(fuss_catalan(m), r).
PowerSeries fuss_catalan_power_via_root(int m, const Rational &r, int order);

// Ternary numbers T = 1 + t T^3.
PowerSeries ternary(int order);

RiordanArray pascal(int order);                  // (1/(1-t), t/(1-t))
RiordanArray delannoy(int order);                // (1/(1-t), t(1+t)/(1-t))
RiordanArray fibonacci_catalan_array(int order); // (1/(1-t-t^2), t C(t))
RiordanArray catalan_array(int order);           // (C(t), t C(t))

Rational pascal_entry(int n, int k);
Rational delannoy_entry(int n, int k);
Rational fibonacci_catalan_entry(int n, int k);
Rational catalan_array_entry(int n, int k);
Rational fibonacci_number(int n); // F_0 = F_1 = 1

// k/(2j+k) binom(2j+k, j), i.e. [t^j] C(t)^k, with the k = 0 column taken
// as the unit sequence 1, 0, 0, ...
Rational catalan_power_coeff(int k, int j);

struct ArrayEntry {
    std::string name;
    std::function<RiordanArray(int)> build;
    std::function<Rational(int, int)> closed_form;
};

struct SeriesEntry {
    std::string name;
    std::function<PowerSeries(int)> build;
};

// Stable identifiers: pascal, delannoy, fib-catalan, catalan-array.
const std::vector<ArrayEntry> &arrays();

// Stable identifiers: catalan, central-binomial, ternary, and fuss:<m>.
// fuss:<m> is resolved by series_by_name rather than listed.
const std::vector<SeriesEntry> &series();

// UnknownName when absent.
const ArrayEntry &array_by_name(std::string_view name);
PowerSeries series_by_name(std::string_view name, int order);

bool is_array_name(std::string_view name);
bool is_series_name(std::string_view name);

} // namespace riordan::catalog

#endif
