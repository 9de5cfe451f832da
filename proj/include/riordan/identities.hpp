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

#ifndef RIORDAN_IDENTITIES_HPP
#define RIORDAN_IDENTITIES_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "riordan/array.hpp"
#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan::identities
{

struct Param {
    std::string name;
    Rational value;
    friend bool operator==(const Param &, const Param &) = default;
};

// One grid point of one identity. pass is lhs == rhs; singular points are
// recorded but carry no verdict.
struct IdentityCase {
    std::string name;
    std::vector<Param> params;
    Rational lhs;
    Rational rhs;
    bool pass = false;
    bool singular = false;
};

// Adds delta to the coefficient beta_index of the A-sequence power used by
// the summation-type suites. Negative control only.
struct BetaPerturbation {
    int index = 1;
    Rational delta{1};
};

std::vector<Rational> default_rational_grid();

struct SuiteBounds {
    int p_max = 4;
    int r_max = 3;
    int n_max = 10;
    int order = kDefaultOrder;
    std::vector<Rational> rational_grid = default_rational_grid();
    std::optional<BetaPerturbation> perturb;
};

struct IdentityReport {
    std::string name;
    std::string grid;
    long total = 0;
    long passed = 0;
    long failed = 0;
    long skipped = 0;
    std::optional<IdentityCase> first_failure;

    bool ok() const noexcept
    {
        return failed == 0;
    }
};

// x(x-1)...(x-k+1)/k!; zero for k < 0.
Rational gbinom(const Rational &x, long k);

// Row recurrence of the horizontal (p, r) subarray read off R:
// d_{p(n+1)+r, (p-1)(n+1)+r+k+1} = sum_j beta_j d_{pn+r, (p-1)n+r+k+j},
// beta_j = [t^j] A^p. The span overload takes beta directly.
IdentityCase check_summation_formula(const RiordanArray &R, int p, int r, int n, int k);
IdentityCase check_summation_formula(const RiordanArray &R, std::span<const Rational> beta, int p, int r, int n, int k);

// Pascal specialisation with beta_j = binom(p, j), binomials only.
IdentityCase check_pascal_onepth(int p, int r, int n, int k, const std::optional<BetaPerturbation> &perturb = {});

// Closed-form double sums for (1/(1-t-t^2), tC) and (C, tC).
IdentityCase check_fibonacci_catalan(int p, int r, int n, int k, const std::optional<BetaPerturbation> &perturb = {});
IdentityCase check_catalan_array(int p, int r, int n, int k, const std::optional<BetaPerturbation> &perturb = {});

IdentityCase check_chu_vandermonde(int n, int k, int s);

IdentityCase check_fuss_convolution(int p, int r, int n, int k, int s);
IdentityCase check_fuss_convolution_s1(int p, int r, int n, int k);
IdentityCase check_fuss_convolution_shifted(int p, int r, int n, int k);

IdentityCase check_gkp562(const Rational &x, const Rational &y, const Rational &p, int n);
IdentityCase check_gould(const Rational &r, const Rational &q, const Rational &pp, int n);

const std::vector<std::string> &suite_names();
bool is_suite_name(const std::string &name);

using CaseCallback = std::function<void(const std::string &suite, const IdentityCase &)>;

// Sweeps one suite in a fixed grid order. The callback sees every case,
// singular ones included.
IdentityReport run_suite(const std::string &name, const SuiteBounds &bounds, const CaseCallback &on_case = {});
std::vector<IdentityReport> run_suite(const std::vector<std::string> &names, const SuiteBounds &bounds, const CaseCallback &on_case = {});

} // namespace riordan::identities

#endif
