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

#include "riordan/onepth.hpp"

#include <algorithm>
#include <string>

#include "riordan/errors.hpp"

namespace riordan
{

std::string_view to_string(Orientation o) noexcept
{
    return o == Orientation::Vertical ? "vertical" : "horizontal";
}

Orientation parse_orientation(std::string_view text)
{
    if (text == "vertical") {
        return Orientation::Vertical;
    }
    if (text == "horizontal") {
        return Orientation::Horizontal;
    }
    raise(ErrorCode::InvalidArgument, "orientation must be 'vertical' or 'horizontal', got '" + std::string(text) + "'");
}

namespace
{

void check_params(int p, int r)
{
    if (p < 1 || r < 0) {
        raise(ErrorCode::InvalidArgument,
              "one-pth parameters need p >= 1 and r >= 0 (got p=" + std::to_string(p) + ", r=" + std::to_string(r) + ")");
    }
}

// t phi' g(phi) f(phi)^r / phi^{r+1} = phi' g(phi) ((f/t)(phi))^r / (phi/t)
PowerSeries onepth_g(const RiordanArray &a, const PhiData &d, int r)
{
    const auto f_over_t = shift(a.f(), -1);
    const auto scaled = pow_int(compose(f_over_t, d.phi), r);
    const auto phi_over_t = shift(d.phi, -1);
    return div(mul(mul(d.phi_prime, compose(a.g(), d.phi)), scaled), phi_over_t);
}

} // namespace

PhiData compute_phi(const PowerSeries &f, int p)
{
    check_params(p, 0);
    if (f.order() < 1 || !f[0].is_zero() || f[1].is_zero()) {
        raise(ErrorCode::NotRevertible, "phi needs f(0) = 0 and f'(0) != 0");
    }
    const auto f_over_t = shift(f, -1);
    const auto t_over_f = div(PowerSeries::constant(1, f_over_t.order()), f_over_t);
    // t^p / f^{p-1} = t (t/f)^{p-1}
    const auto base = shift(pow_int(t_over_f, p - 1), 1);
    PhiData d;
    d.phi = revert(base);
    d.u = pow_int(f_over_t, p - 1);
    d.phi_prime = derive(d.phi);
    return d;
}

RiordanArray vertical_onepth(const RiordanArray &a, int p, int r)
{
    check_params(p, r);
    const auto d = compute_phi(a.f(), p);
    return RiordanArray(onepth_g(a, d, r), d.phi);
}

RiordanArray horizontal_onepth(const RiordanArray &a, int p, int r)
{
    check_params(p, r);
    const auto d = compute_phi(a.f(), p);
    return RiordanArray(onepth_g(a, d, r), compose(a.f(), d.phi));
}

RiordanArray onepth(const RiordanArray &a, const OnePthSpec &spec)
{
    return spec.orientation == Orientation::Vertical ? vertical_onepth(a, spec.p, spec.r)
                                                     : horizontal_onepth(a, spec.p, spec.r);
}

int required_parent_order(const OnePthSpec &spec, int rows)
{
    check_params(spec.p, spec.r);
    if (rows < 1) {
        raise(ErrorCode::InvalidArgument, "at least one row is required");
    }
    return std::max({spec.p * (rows - 1) + spec.r, rows, 2});
}

RiordanArray onepth_rows(const RiordanArray &a, const OnePthSpec &spec, int rows)
{
    const int need = required_parent_order(spec, rows);
    if (a.order() < need) {
        raise(ErrorCode::OrderExceeded, std::to_string(rows) + " rows of the (p=" + std::to_string(spec.p) +
                                            ", r=" + std::to_string(spec.r) + ") array need parent order " +
                                            std::to_string(need) + ", have " + std::to_string(a.order()));
    }
    const auto full = onepth(a, spec);
    const int order = std::max(rows - 1, 1);
    return RiordanArray(full.g().truncate(order), full.f().truncate(order));
}

namespace
{

void check_oracle_order(const RiordanArray &a, int p, int r, int rows)
{
    check_params(p, r);
    if (rows < 0) {
        raise(ErrorCode::InvalidArgument, "negative row count");
    }
    if (rows > 0 && p * (rows - 1) + r > a.order()) {
        raise(ErrorCode::OrderExceeded, "index extraction needs parent order " + std::to_string(p * (rows - 1) + r) +
                                            ", have " + std::to_string(a.order()));
    }
}

} // namespace

Matrix oracle_vertical(const RiordanArray &a, int p, int r, int rows)
{
    check_oracle_order(a, p, r, rows);
    Matrix m(rows);
    for (int n = 0; n < rows; ++n) {
        for (int k = 0; k <= n; ++k) {
            m(n, k) = a.entry(p * n + r - k, (p - 1) * n + r);
        }
    }
    return m;
}

Matrix oracle_horizontal(const RiordanArray &a, int p, int r, int rows)
{
    check_oracle_order(a, p, r, rows);
    Matrix m(rows);
    for (int n = 0; n < rows; ++n) {
        for (int k = 0; k <= n; ++k) {
            m(n, k) = a.entry(p * n + r, (p - 1) * n + r + k);
        }
    }
    return m;
}

Matrix oracle(const RiordanArray &a, const OnePthSpec &spec, int rows)
{
    return spec.orientation == Orientation::Vertical ? oracle_vertical(a, spec.p, spec.r, rows)
                                                     : oracle_horizontal(a, spec.p, spec.r, rows);
}

Coefficient lif_coeff(const PowerSeries &F, const PowerSeries &u, int n)
{
    if (n < 1) {
        raise(ErrorCode::InvalidArgument, "Lagrange inversion coefficient needs n >= 1");
    }
    if (u[0].is_zero()) {
        raise(ErrorCode::NonUnitDivisor, "Lagrange inversion needs u(0) != 0");
    }
    if (n > std::min(F.order(), u.order())) {
        raise(ErrorCode::OrderExceeded, "coefficient " + std::to_string(n) + " beyond the inputs' order");
    }
    const auto uu = u.truncate(n);
    const auto kernel = sub(uu, shift(derive(uu), 1));
    return mul(mul(F.truncate(n), pow_int(uu, n - 1)), kernel)[n];
}

PowerSeries a_seq_formula(const RiordanArray &a, int p, Orientation orientation)
{
    check_params(p, 0);
    if (orientation == Orientation::Vertical) {
        return pow_int(shift(a.f(), -1), p - 1);
    }
    return pow_int(a_sequence(a), p);
}

} // namespace riordan
