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

#ifndef RIORDAN_ARRAY_HPP
#define RIORDAN_ARRAY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "riordan/series.hpp"

namespace riordan
{

// Dense square matrix of exact rationals, used for materialised (truncated)
// Riordan arrays and for brute-force oracles.
class Matrix
{
public:
    Matrix() = default;
    explicit Matrix(int rows);

    int rows() const noexcept
    {
        return rows_;
    }

    const Rational &operator()(int n, int k) const
    {
        return data_[static_cast<std::size_t>(n * rows_ + k)];
    }
    Rational &operator()(int n, int k)
    {
        return data_[static_cast<std::size_t>(n * rows_ + k)];
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    int rows_ = 0;
    std::vector<Rational> data_;
};

// The Riordan array (g, f): d_{n,k} = [t^n] g f^k.
//
// Requires g(0) != 0, f(0) = 0 and f'(0) != 0. g(0) need not be 1. Both
// series are truncated to a shared order. Entries are served from column
// generating functions g f^k which are materialised once per array instance
// on first use; copies share that cache and it is safe to read concurrently.
class RiordanArray
{
public:
    RiordanArray(PowerSeries g, PowerSeries f);

    const PowerSeries &g() const noexcept
    {
        return g_;
    }
    const PowerSeries &f() const noexcept
    {
        return f_;
    }
    int order() const noexcept
    {
        return g_.order();
    }

    // d_{n,k}; zero above the diagonal. OrderExceeded when n > order().
    Coefficient entry(int n, int k) const;

    // Rows 0..rows-1 (rows <= order() + 1).
    Matrix matrix(int rows) const;

private:
    struct Columns;

    const Columns &columns() const;

    PowerSeries g_;
    PowerSeries f_;
    std::shared_ptr<Columns> cache_;
};

// (1, t)
RiordanArray identity_array(int order);

// (g, f)(h, l) = (g * (h o f), l o f)
RiordanArray multiply(const RiordanArray &a, const RiordanArray &b);

// (g, f)^{-1} = (1 / (g o fbar), fbar)
RiordanArray inverse(const RiordanArray &a);

// Fundamental theorem: (g, f) acting on d is g * (d o f).
PowerSeries apply_ftra(const RiordanArray &a, const PowerSeries &d);

// A with f = t A(f), computed as t / fbar.
PowerSeries a_sequence(const RiordanArray &a);

// Z with g = 1 / (1 - t Z(f)), computed as (g(fbar) - 1) / (fbar g(fbar)).
// Needs g(0) = 1 (UnnormalizedG otherwise).
PowerSeries z_sequence(const RiordanArray &a);

// True when both arrays agree on g and f up to the smaller order.
bool same_array(const RiordanArray &a, const RiordanArray &b);

struct RecurrenceCheck {
    bool holds = true;
    // First failing cell, when !holds: row n + 1, column k.
    int row = -1;
    int column = -1;
    Rational expected;
    Rational actual;

    explicit operator bool() const noexcept
    {
        return holds;
    }
};

// Checks d_{n+1,k} = sum_j a_j d_{n,k-1+j} (k >= 1) and
// d_{n+1,0} = sum_j z_j d_{n,j} for 0 <= n < rows.
RecurrenceCheck row_recurrence_check(const RiordanArray &a, int rows);

// Same check on an explicit matrix, e.g. one with a deliberately altered cell.
RecurrenceCheck row_recurrence_check(const Matrix &d, const PowerSeries &a_seq, const PowerSeries &z_seq, int rows);

struct Subgroup {
    enum class Kind { Appell, Lagrange, Bell, HittingTime, Derivative, Checkerboard };
    Kind kind;
    int k = 0; // only for Bell

    std::string label() const;
    friend bool operator==(const Subgroup &, const Subgroup &) = default;
};

// Largest k tried when testing membership of the k-Bell subgroup.
inline constexpr int kMaxBellIndex = 8;

// Subgroups whose defining relation holds through the truncation order.
// Decided on truncated data only; no symbolic proof is attempted.
std::vector<Subgroup> classify_subgroups(const RiordanArray &a);

// (R (1, -t))^2 == (1, t) through the truncation order.
bool is_pseudo_involution(const RiordanArray &a);

struct IdentitySides {
    Coefficient lhs;
    Coefficient rhs;
};

// d_{n,k} versus sum_{j=s}^{n} d_{n-j,k-s} [t^j] f^s, for k >= s >= 1.
IdentitySides convolution_identity(const RiordanArray &a, int n, int k, int s);

} // namespace riordan

#endif
