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

#ifndef RIORDAN_ONEPTH_HPP
#define RIORDAN_ONEPTH_HPP

#include <string_view>

#include "riordan/array.hpp"
#include "riordan/series.hpp"

namespace riordan
{

enum class Orientation { Vertical, Horizontal };

std::string_view to_string(Orientation o) noexcept;
// "vertical" or "horizontal"; InvalidArgument otherwise.
Orientation parse_orientation(std::string_view text);

// Selects the (p, r) one-pth subarray of a Riordan array (g, f):
//   vertical:   entries d_{pn+r-k, (p-1)n+r}
//   horizontal: entries d_{pn+r, (p-1)n+r+k}
struct OnePthSpec {
    int p = 1;
    int r = 0;
    Orientation orientation = Orientation::Vertical;
};

// phi is the compositional inverse of t^p / f^{p-1}, formed as
// t (t/f)^{p-1} so every intermediate is an ordinary power series.
// It satisfies phi = t u(phi) with u = (f/t)^{p-1}.
struct PhiData {
    PowerSeries phi;
    PowerSeries u;
    PowerSeries phi_prime;
};

PhiData compute_phi(const PowerSeries &f, int p);

// Generating-function constructions. With parent order N both series come
// out at order N - 1 (division of phi by t costs one coefficient).
//   vertical:   (t phi' g(phi) f(phi)^r / phi^{r+1}, phi)
//   horizontal: (t phi' g(phi) f(phi)^r / phi^{r+1}, f(phi))
RiordanArray vertical_onepth(const RiordanArray &a, int p, int r);
RiordanArray horizontal_onepth(const RiordanArray &a, int p, int r);
RiordanArray onepth(const RiordanArray &a, const OnePthSpec &spec);

// Parent order needed so that rows 0..rows-1 of the one-pth array are known
// both through the index map (p(rows-1)+r) and through the generating
// function construction (rows). Never below 2, so f keeps its linear term.
int required_parent_order(const OnePthSpec &spec, int rows);

// The one-pth array truncated to rows-1; OrderExceeded when the parent is
// too short instead of silently returning fewer rows.
RiordanArray onepth_rows(const RiordanArray &a, const OnePthSpec &spec, int rows);

// Brute-force index extraction from the parent's entries, independent of
// phi. rows counts rows 0..rows-1; needs p(rows-1)+r <= order.
Matrix oracle_vertical(const RiordanArray &a, int p, int r, int rows);
Matrix oracle_horizontal(const RiordanArray &a, int p, int r, int rows);
Matrix oracle(const RiordanArray &a, const OnePthSpec &spec, int rows);

// Lagrange inversion: [t^n] F(phi) = [t^n] F u^{n-1} (u - t u') where
// phi = t u(phi), without forming phi. Needs u(0) != 0 and n >= 1.
Coefficient lif_coeff(const PowerSeries &F, const PowerSeries &u, int n);

// The A-sequence the one-pth array is predicted to have:
//   vertical:   (f/t)^{p-1}
//   horizontal: A(t)^p with A the parent's A-sequence
PowerSeries a_seq_formula(const RiordanArray &a, int p, Orientation orientation);

} // namespace riordan

#endif
