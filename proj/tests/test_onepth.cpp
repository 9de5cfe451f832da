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

#include "riordan/catalog.hpp"
#include "riordan/errors.hpp"
#include "riordan/onepth.hpp"
#include "support.hpp"

using namespace riordan;
using namespace riordan::testing;

namespace
{

std::vector<RiordanArray> catalog_arrays(int order)
{
    std::vector<RiordanArray> out;
    for (const auto &e : catalog::arrays()) {
        out.push_back(e.build(order));
    }
    return out;
}

void check_against_oracle(const RiordanArray &parent, const OnePthSpec &spec)
{
    const auto built = onepth(parent, spec);
    int rows = 0;
    while (spec.p * rows + spec.r <= parent.order() && rows <= built.order()) {
        ++rows;
    }
    const auto expected = oracle(parent, spec, rows);
    CHECK(built.matrix(rows) == expected);
}

} // namespace

TEST_CASE("compute_phi")
{
    const int n = 12;
    const auto pf = catalog::pascal(n).f();
    CHECK(compute_phi(pf, 1).phi == PowerSeries::t(n));

    const auto p2 = compute_phi(pf, 2).phi;
    const auto cat = catalan_recurrence(n);
    for (int i = 1; i <= n; ++i) {
        CHECK(p2[i] == cat[static_cast<std::size_t>(i - 1)]);
    }

    // t (1-t)^2 reverted term by term: 0, 1, 2, 7, 30, ...
    const auto p3 = compute_phi(pf, 3).phi;
    const auto expected = naive_revert(ints({0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}), n);
    CHECK(values(p3) == expected);
    CHECK(values(p3.truncate(4)) == ints({0, 1, 2, 7, 30}));

    std::mt19937 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_revertible(rng, 10);
        for (int p = 1; p <= 4; ++p) {
            const auto d = compute_phi(f, p);
            // phi = t u(phi)
            CHECK(agree(d.phi, shift(compose(d.u, d.phi), 1)));
            // t (t/f)^{p-1} composed with phi is t
            const auto base = shift(pow_int(div(PowerSeries::constant(1, 9), shift(f, -1)), p - 1), 1);
            CHECK(compose(base, d.phi) == PowerSeries::t(d.phi.order()));
            CHECK(d.phi_prime == derive(d.phi));
        }
    }
    CHECK_THROWS_AS(compute_phi(series({1, 1, 0}), 2), Error);
}

TEST_CASE("vertical one-pth of Pascal")
{
    const auto p = catalog::pascal(20);
    const auto half = vertical_onepth(p, 2, 0);
    const std::vector<long> central{1, 2, 6, 20, 70, 252};
    for (int n = 0; n < 6; ++n) {
        CHECK(half.entry(n, 0) == Rational(central[static_cast<std::size_t>(n)]));
    }

    // p = 1, r = 0: Toeplitz matrix of column 0 (all ones for Pascal)
    const auto toe = vertical_onepth(p, 1, 0);
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(toe.entry(n, k) == Rational(1));
        }
    }
    for (const auto &a : catalog_arrays(14)) {
        const auto t1 = vertical_onepth(a, 1, 0);
        CHECK(agree(t1.g(), a.g()));
        CHECK(t1.f() == PowerSeries::t(t1.order()));
        // p = 2: v_{n,k} = d_{2n-k, n}
        const auto v = vertical_onepth(a, 2, 0);
        for (int n = 0; 2 * n <= 14; ++n) {
            for (int k = 0; k <= n; ++k) {
                CHECK(v.entry(n, k) == a.entry(2 * n - k, n));
            }
        }
    }
}

TEST_CASE("horizontal one-pth")
{
    for (const auto &a : catalog_arrays(14)) {
        CHECK(same_array(horizontal_onepth(a, 1, 0), a));
        const auto h = horizontal_onepth(a, 2, 0);
        for (int n = 0; 2 * n <= 14; ++n) {
            for (int k = 0; k <= n; ++k) {
                CHECK(h.entry(n, k) == a.entry(2 * n, n + k));
            }
        }
    }
    // Pascal, p = 2: (B C^r, t C^2)
    const int n = 16;
    const auto p = catalog::pascal(n);
    for (int r = 0; r <= 3; ++r) {
        const auto h = horizontal_onepth(p, 2, r);
        const auto c = catalog::catalan(n);
        CHECK(agree(h.g(), mul(catalog::central_binomial(n), pow_int(c, r))));
        CHECK(agree(h.f(), shift(mul(c, c), 1)));
    }
}

TEST_CASE("index-extraction oracles")
{
    const auto p = catalog::pascal(12);
    const auto v = oracle_vertical(p, 2, 0, 3);
    CHECK(v(2, 0) == Rational(6));
    CHECK(v(2, 1) == Rational(3));
    CHECK(v(2, 2) == Rational(1));
    const auto h = oracle_horizontal(p, 2, 0, 3);
    CHECK(h(2, 0) == Rational(6));
    CHECK(h(2, 1) == Rational(4));
    CHECK(h(2, 2) == Rational(1));
    CHECK(h(1, 2) == Rational(0));
    CHECK(oracle_horizontal(p, 2, 1, 2)(1, 0) == Rational(3));

    const auto toe = oracle_vertical(p, 1, 0, 6);
    for (int n = 0; n < 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(toe(n, k) == p.entry(n - k, 0));
        }
    }
    for (int r = 0; r <= 3; ++r) {
        CHECK(oracle_vertical(p, 3, r, 1)(0, 0) == p.entry(r, r));
    }
    CHECK_THROWS_AS(oracle_vertical(p, 3, 1, 5), Error);
}

TEST_CASE("generating functions agree with the oracles")
{
    for (const auto &a : catalog_arrays(16)) {
        for (int p = 1; p <= 4; ++p) {
            for (int r = 0; r <= 3; ++r) {
                check_against_oracle(a, {p, r, Orientation::Vertical});
                check_against_oracle(a, {p, r, Orientation::Horizontal});
            }
        }
    }
}

TEST_CASE("one-pth A-sequences")
{
    const auto p = catalog::pascal(14);
    CHECK(a_seq_formula(p, 2, Orientation::Horizontal) == series({1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(a_seq_formula(p, 1, Orientation::Vertical) == PowerSeries::constant(1, 13));
    CHECK(a_seq_formula(p, 2, Orientation::Vertical) == geometric(13));
    CHECK(agree(a_sequence(vertical_onepth(p, 2, 0)), geometric(13)));

    for (const auto &a : catalog_arrays(14)) {
        for (int pp = 1; pp <= 4; ++pp) {
            for (int r = 0; r <= 3; ++r) {
                CHECK(agree(a_sequence(vertical_onepth(a, pp, r)), a_seq_formula(a, pp, Orientation::Vertical)));
                CHECK(agree(a_sequence(horizontal_onepth(a, pp, r)), a_seq_formula(a, pp, Orientation::Horizontal)));
            }
        }
    }
}

TEST_CASE("factorisation through (t phi'/phi, phi)")
{
    for (const auto &a : catalog_arrays(14)) {
        for (int p = 1; p <= 4; ++p) {
            const auto d = compute_phi(a.f(), p);
            const RiordanArray left(div(d.phi_prime, shift(d.phi, -1)), d.phi);
            const RiordanArray appell(a.g(), PowerSeries::t(a.order()));
            const auto v = vertical_onepth(a, p, 0);
            const auto vv = multiply(left, appell);
            CHECK(v.g() == vv.g());
            CHECK(v.f() == vv.f());
            const auto h = horizontal_onepth(a, p, 0);
            const auto hh = multiply(left, a);
            CHECK(h.g() == hh.g());
            CHECK(h.f() == hh.f());
        }
    }
}

TEST_CASE("Lagrange inversion coefficients")
{
    const int n = 12;
    const auto t = PowerSeries::t(n);
    const auto u = series({1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    for (int i = 1; i <= n; ++i) {
        CHECK(lif_coeff(t, u, i) == Rational(1));
        CHECK(lif_coeff(t, PowerSeries::constant(1, n), i) == Rational(i == 1 ? 1 : 0));
    }

    std::mt19937 rng(33);
    for (const auto &a : catalog_arrays(n)) {
        for (int p = 2; p <= 3; ++p) {
            const auto d = compute_phi(a.f(), p);
            const auto F = random_series(rng, n);
            const auto direct = compose(F, d.phi);
            for (int i = 1; i <= std::min(n - 1, direct.order()); ++i) {
                CHECK(lif_coeff(F, d.u, i) == direct[i]);
            }
        }
    }
    CHECK_THROWS_AS(lif_coeff(t, u, n + 1), Error);
}

TEST_CASE("parent order bookkeeping")
{
    const OnePthSpec spec{3, 2, Orientation::Horizontal};
    CHECK(required_parent_order(spec, 5) == 14);
    CHECK(required_parent_order({1, 0, Orientation::Vertical}, 5) == 5);
    const auto p = catalog::pascal(13);
    try {
        (void)onepth_rows(p, spec, 5);
        FAIL("expected OrderExceeded");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::OrderExceeded);
    }
    const auto ok = onepth_rows(catalog::pascal(14), spec, 5);
    CHECK(ok.order() == 4);
    CHECK(ok.matrix(5) == oracle_horizontal(catalog::pascal(14), 3, 2, 5));
    const auto toe = onepth_rows(catalog::pascal(5), {1, 0, Orientation::Vertical}, 5);
    CHECK(toe.matrix(5) == oracle_vertical(catalog::pascal(5), 1, 0, 5));
    CHECK(parse_orientation("vertical") == Orientation::Vertical);
    CHECK_THROWS_AS(parse_orientation("diagonal"), Error);
    CHECK_THROWS_AS(vertical_onepth(p, 0, 0), Error);
}
