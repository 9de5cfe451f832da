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

// Shared helpers and independent oracles for the test suites. Nothing in
// here calls into the code paths it is used to check.

#ifndef RIORDAN_TESTS_SUPPORT_HPP
#define RIORDAN_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "riordan/series.hpp"

namespace riordan::testing
{

inline PowerSeries series(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return PowerSeries(std::move(v));
}

inline PowerSeries series_q(std::initializer_list<const char *> c)
{
    std::vector<Rational> v;
    for (const char *x : c) {
        v.push_back(Rational::parse(x));
    }
    return PowerSeries(std::move(v));
}

inline PowerSeries from_values(const std::vector<Rational> &v)
{
    return PowerSeries(v);
}

inline PowerSeries geometric(int order)
{
    return PowerSeries(std::vector<Rational>(static_cast<std::size_t>(order + 1), Rational(1)));
}

// Catalan numbers from the convolution recurrence C_{n+1} = sum C_i C_{n-i}.
inline std::vector<Rational> catalan_recurrence(int count)
{
    std::vector<Rational> c{Rational(1)};
    while (static_cast<int>(c.size()) < count) {
        const std::size_t n = c.size() - 1;
        Rational s;
        for (std::size_t i = 0; i <= n; ++i) {
            s += c[i] * c[n - i];
        }
        c.push_back(s);
    }
    return c;
}

// F_0 = F_1 = 1, F_n = F_{n-1} + F_{n-2}.
inline std::vector<Rational> fibonacci_recurrence(int count)
{
    std::vector<Rational> f;
    for (int i = 0; i < count; ++i) {
        f.push_back(i < 2 ? Rational(1) : f[static_cast<std::size_t>(i - 1)] + f[static_cast<std::size_t>(i - 2)]);
    }
    return f;
}

// Plain polynomial evaluation of f(g) by summing f_i g^i with repeated
// multiplication; independent of Horner composition.
inline std::vector<Rational> naive_compose(const std::vector<Rational> &f, const std::vector<Rational> &g, int n)
{
    std::vector<Rational> out(static_cast<std::size_t>(n + 1));
    std::vector<Rational> pw(static_cast<std::size_t>(n + 1));
    pw[0] = Rational(1);
    for (std::size_t i = 0; i < f.size() && static_cast<int>(i) <= n; ++i) {
        for (int k = 0; k <= n; ++k) {
            out[static_cast<std::size_t>(k)] += f[i] * pw[static_cast<std::size_t>(k)];
        }
        std::vector<Rational> next(static_cast<std::size_t>(n + 1));
        for (int a = 0; a <= n; ++a) {
            for (int b = 0; a + b <= n && b < static_cast<int>(g.size()); ++b) {
                next[static_cast<std::size_t>(a + b)] += pw[static_cast<std::size_t>(a)] * g[static_cast<std::size_t>(b)];
            }
        }
        pw = std::move(next);
    }
    return out;
}

// Reversion by solving f(h) = t one coefficient at a time: with h_1..h_{m-1}
// fixed, [t^m] f(h) = f_1 h_m + [t^m] f(h_partial).
inline std::vector<Rational> naive_revert(const std::vector<Rational> &f, int n)
{
    std::vector<Rational> h(static_cast<std::size_t>(n + 1));
    h[1] = Rational(1) / f[1];
    for (int m = 2; m <= n; ++m) {
        const auto partial = naive_compose(f, h, m);
        h[static_cast<std::size_t>(m)] = -partial[static_cast<std::size_t>(m)] / f[1];
    }
    return h;
}

inline std::vector<Rational> values(const PowerSeries &s)
{
    return {s.coeffs().begin(), s.coeffs().end()};
}

inline std::vector<Rational> ints(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return v;
}

// Random series with small integer coefficients.
inline PowerSeries random_series(std::mt19937 &rng, int order, int lo = -3, int hi = 3)
{
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<Rational> c;
    for (int i = 0; i <= order; ++i) {
        c.emplace_back(d(rng));
    }
    return PowerSeries(std::move(c));
}

// Random series with f(0) = 0 and f'(0) a nonzero small integer.
inline PowerSeries random_revertible(std::mt19937 &rng, int order)
{
    auto s = values(random_series(rng, order));
    s[0] = Rational(0);
    std::uniform_int_distribution<int> d(1, 3);
    s[1] = Rational(std::uniform_int_distribution<int>(0, 1)(rng) ? d(rng) : -d(rng));
    return PowerSeries(std::move(s));
}

} // namespace riordan::testing

#endif
