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

#include "riordan/bell.hpp"

#include <string>

#include "riordan/errors.hpp"

namespace riordan
{

namespace
{

void largest_first(int remaining, int parts, int cap, std::vector<int> &stack, int n, std::vector<PartitionVector> &out)
{
    if (parts == 0) {
        if (remaining == 0) {
            PartitionVector pv;
            pv.counts.assign(static_cast<std::size_t>(n), 0);
            for (int part : stack) {
                ++pv.counts[static_cast<std::size_t>(part - 1)];
            }
            pv.n = n;
            pv.parts = static_cast<int>(stack.size());
            out.push_back(std::move(pv));
        }
        return;
    }
    // the remaining parts - 1 slots need at least one each
    const int hi = std::min(cap, remaining - (parts - 1));
    const int lo = (remaining + parts - 1) / parts;
    for (int part = hi; part >= lo; --part) {
        stack.push_back(part);
        largest_first(remaining - part, parts - 1, part, stack, n, out);
        stack.pop_back();
    }
}

// sum over sigma(n) of derivs[k] prod c_i^{k_i} / k_i!, where c_i = coeff(i).
template <typename Coeff>
Rational partition_sum(int n, std::span<const Rational> derivs, Coeff coeff)
{
    if (static_cast<int>(derivs.size()) < n + 1) {
        raise(ErrorCode::InsufficientDerivatives, "need " + std::to_string(n + 1) + " derivative values, got " + std::to_string(derivs.size()));
    }
    Rational total;
    for (int k = 1; k <= n; ++k) {
        if (derivs[static_cast<std::size_t>(k)].is_zero()) {
            continue;
        }
        Rational inner;
        for (const auto &pv : partitions(n, k)) {
            Rational term(1);
            for (int i = 1; i <= n; ++i) {
                const int ki = pv.multiplicity(i);
                if (ki > 0) {
                    term *= coeff(i).pow(ki) / factorial(ki);
                }
            }
            inner += term;
        }
        total.add_product(derivs[static_cast<std::size_t>(k)], inner);
    }
    return total;
}

std::vector<Rational> reciprocal(std::span<const Rational> in, std::span<const Rational> derivs, int n)
{
    if (n < 0) {
        raise(ErrorCode::InvalidArgument, "negative length");
    }
    if (static_cast<int>(in.size()) < n + 1) {
        raise(ErrorCode::InvalidArgument, "coefficient list shorter than n + 1");
    }
    if (derivs.empty()) {
        raise(ErrorCode::InsufficientDerivatives, "no derivative values");
    }
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    out.push_back(derivs[0]);
    for (int m = 1; m <= n; ++m) {
        out.push_back(partition_sum(m, derivs, [&](int i) { return in[static_cast<std::size_t>(i)]; }));
    }
    return out;
}

} // namespace

std::vector<PartitionVector> partitions(int n, int k)
{
    std::vector<PartitionVector> out;
    if (n < 1 || k < 1 || k > n) {
        return out;
    }
    std::vector<int> stack;
    largest_first(n, k, n, stack, n, out);
    return out;
}

std::vector<PartitionVector> partitions(int n)
{
    std::vector<PartitionVector> out;
    for (int k = 1; k <= n; ++k) {
        auto part = partitions(n, k);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

Rational falling_factorial(const Rational &p, int k)
{
    if (k < 0) {
        raise(ErrorCode::InvalidArgument, "negative falling factorial length");
    }
    Rational out(1);
    for (int i = 0; i < k; ++i) {
        out *= p - Rational(i);
    }
    return out;
}

Rational bell_polynomial(int n, int k, std::span<const Rational> x)
{
    if (k < 1 || k > n) {
        raise(ErrorCode::InvalidArgument, "bell_polynomial needs 1 <= k <= n");
    }
    if (static_cast<int>(x.size()) < n - k + 1) {
        raise(ErrorCode::InvalidArgument, "bell_polynomial needs n - k + 1 arguments");
    }
    Rational total;
    for (const auto &pv : partitions(n, k)) {
        Rational term = factorial(n);
        for (int i = 1; i <= n - k + 1; ++i) {
            const int ki = pv.multiplicity(i);
            if (ki > 0) {
                term *= (x[static_cast<std::size_t>(i - 1)] / factorial(i)).pow(ki) / factorial(ki);
            }
        }
        total += term;
    }
    return total;
}

Rational bell_via_series(const PowerSeries &f, int n, int k)
{
    if (k < 0 || n < 0) {
        raise(ErrorCode::InvalidArgument, "negative index");
    }
    if (n > f.order()) {
        raise(ErrorCode::OrderExceeded, "B_{n,k} needs order >= n");
    }
    if (!f[0].is_zero()) {
        raise(ErrorCode::NonzeroConstantTerm, "bell_via_series needs f(0) = 0");
    }
    return factorial(n) * coeff(pow_int(f, k), n) / factorial(k);
}

Rational faa_di_bruno_coeff(std::span<const Rational> derivs, const PowerSeries &phi, int n)
{
    if (n < 0) {
        raise(ErrorCode::InvalidArgument, "negative index");
    }
    if (n > phi.order()) {
        raise(ErrorCode::OrderExceeded, "phi is too short");
    }
    if (n == 0) {
        if (derivs.empty()) {
            raise(ErrorCode::InsufficientDerivatives, "no derivative values");
        }
        return derivs[0];
    }
    return partition_sum(n, derivs, [&](int i) { return phi[i]; });
}

std::vector<Rational> reciprocal_forward(std::span<const Rational> alpha, std::span<const Rational> fderivs, int n)
{
    return reciprocal(alpha, fderivs, n);
}

std::vector<Rational> reciprocal_backward(std::span<const Rational> beta, std::span<const Rational> fbar_derivs, int n)
{
    return reciprocal(beta, fbar_derivs, n);
}

std::vector<Rational> bell_transform(std::span<const Rational> x, std::span<const Rational> fderivs, int count)
{
    if (static_cast<int>(x.size()) < count) {
        raise(ErrorCode::InvalidArgument, "argument list shorter than count");
    }
    if (static_cast<int>(fderivs.size()) < count + 1) {
        raise(ErrorCode::InsufficientDerivatives, "need count + 1 derivative values");
    }
    std::vector<Rational> y;
    y.reserve(static_cast<std::size_t>(count));
    for (int n = 1; n <= count; ++n) {
        Rational total;
        for (int k = 1; k <= n; ++k) {
            total.add_product(fderivs[static_cast<std::size_t>(k)], bell_polynomial(n, k, x));
        }
        y.push_back(std::move(total));
    }
    return y;
}

std::vector<Rational> power_case_beta(std::span<const Rational> alpha, const Rational &p, int n)
{
    if (alpha.empty() || alpha[0] != Rational(1)) {
        raise(ErrorCode::NonUnitConstant, "power_case_beta needs alpha_0 = 1");
    }
    std::vector<Rational> derivs;
    derivs.reserve(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        derivs.push_back(falling_factorial(p, k));
    }
    return reciprocal(alpha, derivs, n);
}

} // namespace riordan
