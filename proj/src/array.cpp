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

#include "riordan/array.hpp"

#include <algorithm>
#include <mutex>

#include "riordan/errors.hpp"

namespace riordan
{

Matrix::Matrix(int rows) : rows_(rows), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(rows)) {}

struct RiordanArray::Columns {
    std::once_flag once;
    // column[k] = g f^k
    std::vector<PowerSeries> column;
};

RiordanArray::RiordanArray(PowerSeries g, PowerSeries f) : cache_(std::make_shared<Columns>())
{
    if (g[0].is_zero()) {
        raise(ErrorCode::NotRiordan, "g(0) must be nonzero");
    }
    if (f.order() < 1 || !f[0].is_zero() || f[1].is_zero()) {
        raise(ErrorCode::NotRiordan, "f needs f(0) = 0 and f'(0) != 0");
    }
    const int n = std::min(g.order(), f.order());
    g_ = g.truncate(n);
    f_ = f.truncate(n);
}

const RiordanArray::Columns &RiordanArray::columns() const
{
    std::call_once(cache_->once, [this] {
        auto &col = cache_->column;
        col.reserve(static_cast<std::size_t>(order() + 1));
        col.push_back(g_);
        for (int k = 1; k <= order(); ++k) {
            col.push_back(mul(col.back(), f_));
        }
    });
    return *cache_;
}

Coefficient RiordanArray::entry(int n, int k) const
{
    if (n < 0 || k < 0) {
        raise(ErrorCode::InvalidArgument, "negative array index");
    }
    if (n > order()) {
        raise(ErrorCode::OrderExceeded,
              "row " + std::to_string(n) + " beyond truncation order " + std::to_string(order()));
    }
    if (k > n) {
        return Rational(0);
    }
    return columns().column[static_cast<std::size_t>(k)][n];
}

Matrix RiordanArray::matrix(int rows) const
{
    if (rows - 1 > order()) {
        raise(ErrorCode::OrderExceeded,
              std::to_string(rows) + " rows requested from an array of order " + std::to_string(order()));
    }
    Matrix m(rows);
    for (int n = 0; n < rows; ++n) {
        for (int k = 0; k <= n; ++k) {
            m(n, k) = entry(n, k);
        }
    }
    return m;
}

RiordanArray identity_array(int order)
{
    return RiordanArray(PowerSeries::constant(1, order), PowerSeries::t(order));
}

RiordanArray multiply(const RiordanArray &a, const RiordanArray &b)
{
    return RiordanArray(mul(a.g(), compose(b.g(), a.f())), compose(b.f(), a.f()));
}

RiordanArray inverse(const RiordanArray &a)
{
    const auto fbar = revert(a.f());
    const auto one = PowerSeries::constant(1, fbar.order());
    return RiordanArray(div(one, compose(a.g(), fbar)), fbar);
}

PowerSeries apply_ftra(const RiordanArray &a, const PowerSeries &d)
{
    return mul(a.g(), compose(d, a.f()));
}

PowerSeries a_sequence(const RiordanArray &a)
{
    const auto fbar = revert(a.f());
    const auto unit = shift(fbar, -1);
    return div(PowerSeries::constant(1, unit.order()), unit);
}

PowerSeries z_sequence(const RiordanArray &a)
{
    if (a.g()[0] != Rational(1)) {
        raise(ErrorCode::UnnormalizedG, "Z-sequence needs g(0) = 1, got " + a.g()[0].str());
    }
    const auto fbar = revert(a.f());
    const auto gf = compose(a.g(), fbar);
    const auto num = shift(sub(gf, PowerSeries::constant(1, gf.order())), -1);
    const auto den = mul(shift(fbar, -1), gf);
    return div(num, den);
}

bool same_array(const RiordanArray &a, const RiordanArray &b)
{
    return agree(a.g(), b.g()) && agree(a.f(), b.f());
}

RecurrenceCheck row_recurrence_check(const RiordanArray &a, int rows)
{
    if (rows > a.order()) {
        raise(ErrorCode::OrderExceeded, "recurrence check needs rows <= order");
    }
    return row_recurrence_check(a.matrix(rows + 1), a_sequence(a), z_sequence(a), rows);
}

RecurrenceCheck row_recurrence_check(const Matrix &d, const PowerSeries &a_seq, const PowerSeries &z_seq, int rows)
{
    if (rows + 1 > d.rows() || rows - 1 > std::min(a_seq.order(), z_seq.order())) {
        raise(ErrorCode::OrderExceeded, "recurrence check needs more rows or sequence terms than available");
    }
    RecurrenceCheck out;
    for (int n = 0; n < rows; ++n) {
        for (int k = 0; k <= n + 1; ++k) {
            Rational predicted;
            if (k == 0) {
                for (int j = 0; j <= n; ++j) {
                    predicted.add_product(z_seq[j], d(n, j));
                }
            } else {
                for (int j = 0; k - 1 + j <= n; ++j) {
                    predicted.add_product(a_seq[j], d(n, k - 1 + j));
                }
            }
            if (predicted != d(n + 1, k)) {
                out.holds = false;
                out.row = n + 1;
                out.column = k;
                out.expected = predicted;
                out.actual = d(n + 1, k);
                return out;
            }
        }
    }
    return out;
}

std::string Subgroup::label() const
{
    switch (kind) {
        case Kind::Appell:
            return "Appell";
        case Kind::Lagrange:
            return "Lagrange";
        case Kind::Bell:
            return "Bell(" + std::to_string(k) + ")";
        case Kind::HittingTime:
            return "hitting-time";
        case Kind::Derivative:
            return "derivative";
        case Kind::Checkerboard:
            return "checkerboard";
    }
    return "unknown";
}

namespace
{

bool has_parity(const PowerSeries &s, int parity)
{
    for (int i = 0; i <= s.order(); ++i) {
        if (i % 2 != parity && !s[i].is_zero()) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<Subgroup> classify_subgroups(const RiordanArray &a)
{
    using Kind = Subgroup::Kind;
    const int n = a.order();
    const auto &g = a.g();
    const auto &f = a.f();
    std::vector<Subgroup> out;
    if (f == PowerSeries::t(n)) {
        out.push_back({Kind::Appell});
    }
    if (g == PowerSeries::constant(1, n)) {
        out.push_back({Kind::Lagrange});
    }
    for (int k = 1; k <= kMaxBellIndex; ++k) {
        if (agree(f, shift(pow_int(g, k), 1))) {
            out.push_back({Kind::Bell, k});
        }
    }
    const auto df = derive(f);
    if (agree(g, div(df, shift(f, -1)))) {
        out.push_back({Kind::HittingTime});
    }
    if (agree(g, df)) {
        out.push_back({Kind::Derivative});
    }
    if (has_parity(g, 0) && has_parity(f, 1)) {
        out.push_back({Kind::Checkerboard});
    }
    return out;
}

bool is_pseudo_involution(const RiordanArray &a)
{
    const int n = a.order();
    const RiordanArray flip(PowerSeries::constant(1, n), PowerSeries::monomial(-1, 1, n));
    const auto m = multiply(a, flip);
    return same_array(multiply(m, m), identity_array(n));
}

IdentitySides convolution_identity(const RiordanArray &a, int n, int k, int s)
{
    if (s < 1 || k < s) {
        raise(ErrorCode::InvalidArgument, "convolution identity needs k >= s >= 1");
    }
    if (n > a.order()) {
        raise(ErrorCode::OrderExceeded, "row " + std::to_string(n) + " beyond truncation order");
    }
    const auto fs = pow_int(a.f(), s);
    IdentitySides out{a.entry(n, k), Rational(0)};
    for (int j = s; j <= n; ++j) {
        out.rhs.add_product(a.entry(n - j, k - s), fs[j]);
    }
    return out;
}

} // namespace riordan
