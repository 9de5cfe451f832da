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

#ifndef RIORDAN_BELL_HPP
#define RIORDAN_BELL_HPP

#include <span>
#include <vector>

#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan
{

// A partition of n recorded by multiplicities: counts[i - 1] = k_i is the
// number of parts equal to i, so sum i k_i = n and sum k_i = parts.
struct PartitionVector {
    std::vector<int> counts;
    int n = 0;
    int parts = 0;

    int multiplicity(int i) const
    {
        return i >= 1 && i <= static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(i - 1)] : 0;
    }
    friend bool operator==(const PartitionVector &, const PartitionVector &) = default;
};

// Partitions of n into exactly k parts, largest part first
// (lexicographically decreasing in the sorted part list).
std::vector<PartitionVector> partitions(int n, int k);

// Every partition of n, grouped by increasing number of parts.
std::vector<PartitionVector> partitions(int n);

// p(p-1)...(p-k+1), with (p)_0 = 1.
Rational falling_factorial(const Rational &p, int k);

// Partial exponential Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}); x[0] is x_1.
Rational bell_polynomial(int n, int k, std::span<const Rational> x);

// n! [t^n] f^k / k!, for f with f(0) = 0.
Rational bell_via_series(const PowerSeries &f, int n, int k);

// [t^n] f(phi(t)) from the derivative data derivs[k] = f^(k)(phi(0)).
// Only the coefficients phi_1..phi_n are read; derivs needs n + 1 entries.
Rational faa_di_bruno_coeff(std::span<const Rational> derivs, const PowerSeries &phi, int n);

// Given a + sum alpha_i t^i and f^(k)(a), returns beta_0..beta_n with
// f(a + sum alpha_i t^i) = sum beta_i t^i. alpha[0] is a and is not read.
std::vector<Rational> reciprocal_forward(std::span<const Rational> alpha, std::span<const Rational> fderivs, int n);

// The inverse direction, driven by the derivatives of the compositional
// inverse of f at f(a). Returns alpha_0..alpha_n with alpha_0 = fbar_derivs[0].
std::vector<Rational> reciprocal_backward(std::span<const Rational> beta, std::span<const Rational> fbar_derivs, int n);

// Exponential form: y_n = sum_k f^(k)(a) B_{n,k}(x_1, ...), for n = 1..count.
// x[0] is x_1; the result's entry i is y_{i+1}.
std::vector<Rational> bell_transform(std::span<const Rational> x, std::span<const Rational> fderivs, int count);

// Coefficients of (1 + sum alpha_i t^i)^p through t^n; alpha[0] must be 1.
std::vector<Rational> power_case_beta(std::span<const Rational> alpha, const Rational &p, int n);

} // namespace riordan

#endif
