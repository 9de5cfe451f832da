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

#include "riordan/identities.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "riordan/catalog.hpp"
#include "riordan/errors.hpp"
#include "riordan/onepth.hpp"

namespace riordan::identities
{

namespace
{

IdentityCase make_case(std::string name, std::vector<Param> params, Rational lhs, Rational rhs)
{
    IdentityCase c{std::move(name), std::move(params), std::move(lhs), std::move(rhs)};
    c.pass = c.lhs == c.rhs;
    return c;
}

IdentityCase singular_case(std::string name, std::vector<Param> params)
{
    IdentityCase c;
    c.name = std::move(name);
    c.params = std::move(params);
    c.singular = true;
    return c;
}

std::vector<Param> ints(std::initializer_list<std::pair<const char *, long>> kv)
{
    std::vector<Param> out;
    for (const auto &[k, v] : kv) {
        out.push_back({k, Rational(v)});
    }
    return out;
}

Rational perturbed(Rational beta, int j, const std::optional<BetaPerturbation> &perturb)
{
    if (perturb && perturb->index == j) {
        beta += perturb->delta;
    }
    return beta;
}

// F_0 = F_1 = 1
Rational fib(long i)
{
    Rational a(1), b(1);
    for (long s = 0; s < i; ++s) {
        a = std::exchange(b, a + b);
    }
    return a;
}

// [t^j] C^K = K/(2j+K) binom(2j+K, j), read as delta_{j0} when K = 0.
Rational catalan_power(long K, long j)
{
    if (K == 0) {
        return Rational(j == 0 ? 1 : 0);
    }
    return Rational(K, 2 * j + K) * gbinom(Rational(2 * j + K), j);
}

// (n,k) entry of (1/(1-t-t^2), tC).
Rational fib_catalan_entry(long n, long k)
{
    Rational s;
    for (long j = 0; j <= n - k; ++j) {
        s += fib(n - k - j) * catalan_power(k, j);
    }
    return s;
}

std::string grid_text(const std::vector<Rational> &g)
{
    std::string s = "{";
    for (std::size_t i = 0; i < g.size(); ++i) {
        s += (i ? "," : "") + g[i].str();
    }
    return s + "}";
}

// Step values for q in the Gould sweep and p in the GKP sweep.
std::vector<Rational> step_grid()
{
    return {Rational(-2), Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
}

enum class GridKind { Integer, Indices, Rational, Series };

std::string describe(GridKind kind, const SuiteBounds &b)
{
    std::ostringstream os;
    switch (kind) {
    case GridKind::Integer:
        os << "p<=" << b.p_max << " r<=" << b.r_max << " n<=" << b.n_max;
        break;
    case GridKind::Indices:
        os << "n<=" << b.n_max;
        break;
    case GridKind::Rational:
        os << "n<=" << b.n_max << " grid=" << grid_text(b.rational_grid) << " steps=" << grid_text(step_grid());
        break;
    case GridKind::Series:
        os << "order=" << b.order << " p<=" << std::max(2, b.p_max);
        break;
    }
    return os.str();
}

class Recorder
{
public:
    Recorder(const std::string &suite, std::string grid, const CaseCallback &cb) : cb_(cb)
    {
        report_.name = suite;
        report_.grid = std::move(grid);
    }

    void operator()(const IdentityCase &c)
    {
        if (cb_) {
            cb_(report_.name, c);
        }
        if (c.singular) {
            ++report_.skipped;
            return;
        }
        ++report_.total;
        if (c.pass) {
            ++report_.passed;
        } else {
            ++report_.failed;
            if (!report_.first_failure) {
                report_.first_failure = c;
            }
        }
    }

    IdentityReport take()
    {
        return std::move(report_);
    }

private:
    const CaseCallback &cb_;
    IdentityReport report_;
};

std::vector<Rational> beta_prefix(const PowerSeries &a_pow, int count, const std::optional<BetaPerturbation> &perturb)
{
    std::vector<Rational> beta;
    for (int j = 0; j < count; ++j) {
        beta.push_back(perturbed(a_pow[j], j, perturb));
    }
    return beta;
}

void sweep_pascal_onepth(const SuiteBounds &b, Recorder &rec)
{
    for (int p = 1; p <= b.p_max; ++p) {
        for (int r = 0; r <= b.r_max; ++r) {
            for (int n = 0; n <= b.n_max; ++n) {
                for (int k = 0; k <= n; ++k) {
                    rec(check_pascal_onepth(p, r, n, k, b.perturb));
                }
            }
        }
    }
}

void sweep_summation(const SuiteBounds &b, Recorder &rec)
{
    const int order = b.p_max * (b.n_max + 1) + b.r_max + 1;
    for (const auto &entry : catalog::arrays()) {
        const auto R = entry.build(order);
        const auto A = a_sequence(R);
        for (int p = 1; p <= b.p_max; ++p) {
            const auto beta = beta_prefix(pow_int(A, p), b.n_max + 1, b.perturb);
            for (int r = 0; r <= b.r_max; ++r) {
                for (int n = 0; n <= b.n_max; ++n) {
                    for (int k = 0; k <= n; ++k) {
                        auto c = check_summation_formula(R, beta, p, r, n, k);
                        c.name += "-" + entry.name;
                        rec(c);
                    }
                }
            }
        }
    }
}

// Closed-form identity plus a second case comparing its left side with the
// summation formula evaluated on the series-built array.
void sweep_example_array(const SuiteBounds &b, Recorder &rec, const RiordanArray &R, const std::string &route,
                         IdentityCase (*check)(int, int, int, int, const std::optional<BetaPerturbation> &))
{
    const auto A = a_sequence(R);
    for (int p = 1; p <= b.p_max; ++p) {
        const auto beta = beta_prefix(pow_int(A, p), b.n_max + 1, b.perturb);
        for (int r = 0; r <= b.r_max; ++r) {
            for (int n = 0; n <= b.n_max; ++n) {
                for (int k = 0; k <= n; ++k) {
                    const auto closed = check(p, r, n, k, b.perturb);
                    rec(closed);
                    const auto series_side = check_summation_formula(R, beta, p, r, n, k);
                    rec(make_case(route, closed.params, closed.lhs, series_side.rhs));
                }
            }
        }
    }
}

void sweep_fib_catalan(const SuiteBounds &b, Recorder &rec)
{
    const auto R = catalog::fibonacci_catalan_array(b.p_max * (b.n_max + 1) + b.r_max + 1);
    sweep_example_array(b, rec, R, "fib-catalan-array-route", check_fibonacci_catalan);
}

void sweep_catalan_array(const SuiteBounds &b, Recorder &rec)
{
    const auto R = catalog::catalan_array(b.p_max * (b.n_max + 1) + b.r_max + 1);
    sweep_example_array(b, rec, R, "catalan-array-route", check_catalan_array);
}

void sweep_chu_vandermonde(const SuiteBounds &b, Recorder &rec)
{
    for (int n = 1; n <= b.n_max; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (int s = 1; s <= k; ++s) {
                rec(check_chu_vandermonde(n, k, s));
            }
        }
    }
}

void sweep_fuss_convolution(const SuiteBounds &b, Recorder &rec)
{
    for (int p = 2; p <= std::max(2, b.p_max); ++p) {
        for (int r = 0; r <= b.r_max; ++r) {
            const auto H = horizontal_onepth(catalog::pascal(p * b.n_max + r + 1), p, r);
            for (int n = 1; n <= b.n_max; ++n) {
                for (int k = 1; k <= n; ++k) {
                    for (int s = 1; s <= k; ++s) {
                        const auto c = check_fuss_convolution(p, r, n, k, s);
                        rec(c);
                        const auto sides = convolution_identity(H, n, k, s);
                        rec(make_case("fuss-convolution-array-route", c.params, c.lhs, sides.rhs));
                    }
                    rec(check_fuss_convolution_s1(p, r, n, k));
                    rec(check_fuss_convolution_shifted(p, r, n, k));
                }
            }
        }
    }
}

void sweep_gkp(const SuiteBounds &b, Recorder &rec)
{
    for (const auto &x : b.rational_grid) {
        for (const auto &y : b.rational_grid) {
            for (const auto &p : step_grid()) {
                for (int n = 0; n <= b.n_max; ++n) {
                    rec(check_gkp562(x, y, p, n));
                }
            }
        }
    }
}

void sweep_gould(const SuiteBounds &b, Recorder &rec)
{
    for (const auto &r : b.rational_grid) {
        for (const auto &q : step_grid()) {
            for (const auto &pp : b.rational_grid) {
                for (int n = 0; n <= b.n_max; ++n) {
                    rec(check_gould(r, q, pp, n));
                }
            }
        }
    }
}

void sweep_fuss_functional(const SuiteBounds &b, Recorder &rec)
{
    const int N = b.order;
    const auto one = PowerSeries::constant(1, N);
    const auto t = PowerSeries::t(N);
    for (int m = 0; m <= 5; ++m) {
        const auto F = catalog::fuss_catalan(m, N);
        const auto rhs = add(one, shift(pow_int(F, m), 1).truncate(N));
        for (int n = 0; n <= N; ++n) {
            rec(make_case("fuss-functional-equation", ints({{"m", m}, {"n", n}}), F[n], rhs[n]));
        }
    }
    const auto geo = div(one, sub(one, t));
    for (int p = 2; p <= 5; ++p) {
        const auto inner = mul(t, pow_int(sub(one, t), p - 1));
        const auto lhs = compose(catalog::fuss_catalan(p, N), inner);
        for (int n = 0; n <= N; ++n) {
            rec(make_case("fuss-composition", ints({{"p", p}, {"n", n}}), lhs[n], geo[n]));
        }
    }
    for (int p = 2; p <= 3; ++p) {
        const auto w = revert(div(t, pow_int(add(one, t), p)));
        const auto onew = add(one, w);
        for (int r = 0; r <= 2; ++r) {
            const auto g = div(pow_int(onew, r + 1), sub(one, scale(w, Rational(p - 1))));
            for (int n = 0; n <= g.order(); ++n) {
                rec(make_case("onepth-g-closed-form", ints({{"p", p}, {"r", r}, {"n", n}}), g[n], gbinom(Rational(p * n + r), n)));
            }
        }
    }
    std::vector<Rational> powers{Rational(1), Rational(2), Rational(3), Rational(1, 2)};
    for (const auto &x : b.rational_grid) {
        if (std::find(powers.begin(), powers.end(), x) == powers.end()) {
            powers.push_back(x);
        }
    }
    for (int m = 0; m <= 4; ++m) {
        const auto F = catalog::fuss_catalan(m, N);
        for (const auto &r : powers) {
            const auto lambert = catalog::fuss_catalan_power(m, r, N);
            const auto direct = pow_rational(F, r.numerator().get_si(), r.denominator().get_si());
            for (int n = 0; n <= N; ++n) {
                rec(make_case("lambert-power", {{"m", Rational(m)}, {"r", r}, {"n", Rational(n)}}, lambert[n], direct[n]));
            }
        }
    }
    for (int p = 2; p <= std::max(2, b.p_max); ++p) {
        const auto H = horizontal_onepth(catalog::pascal(p * N + 1), p, 0);
        const auto expected = sub(catalog::fuss_catalan(p, N), one);
        for (int n = 0; n <= std::min(N, H.order()); ++n) {
            rec(make_case("onepth-f-fuss", ints({{"p", p}, {"n", n}}), H.f()[n], expected[n]));
        }
    }
}

using Sweep = void (*)(const SuiteBounds &, Recorder &);

struct SuiteDef {
    std::string name;
    Sweep sweep;
    GridKind grid;
};

const std::vector<SuiteDef> &suites()
{
    static const std::vector<SuiteDef> defs{
        {"pascal-onepth", sweep_pascal_onepth, GridKind::Integer},
        {"summation", sweep_summation, GridKind::Integer},
        {"fib-catalan", sweep_fib_catalan, GridKind::Integer},
        {"catalan-array", sweep_catalan_array, GridKind::Integer},
        {"chu-vandermonde", sweep_chu_vandermonde, GridKind::Indices},
        {"fuss-convolution", sweep_fuss_convolution, GridKind::Integer},
        {"gkp-562", sweep_gkp, GridKind::Rational},
        {"gould", sweep_gould, GridKind::Rational},
        {"fuss-functional", sweep_fuss_functional, GridKind::Series},
    };
    return defs;
}

} // namespace

std::vector<Rational> default_rational_grid()
{
    return {Rational(-2), Rational(-3, 2), Rational(-1, 2), Rational(0), Rational(1, 3),
            Rational(1, 2), Rational(1), Rational(2), Rational(5, 2)};
}

Rational gbinom(const Rational &x, long k)
{
    if (k < 0) {
        return Rational(0);
    }
    Rational num(1);
    for (long i = 0; i < k; ++i) {
        num *= x - Rational(i);
    }
    return num / factorial(k);
}

IdentityCase check_summation_formula(const RiordanArray &R, int p, int r, int n, int k)
{
    if (p < 1 || r < 0 || k < 0 || k > n) {
        raise(ErrorCode::InvalidArgument, "summation formula needs p >= 1, r >= 0, 0 <= k <= n");
    }
    const auto powered = pow_int(a_sequence(R), p);
    std::vector<Rational> beta;
    for (int j = 0; j <= n - k; ++j) {
        beta.push_back(powered[j]);
    }
    return check_summation_formula(R, beta, p, r, n, k);
}

IdentityCase check_summation_formula(const RiordanArray &R, std::span<const Rational> beta, int p, int r, int n, int k)
{
    if (p < 1 || r < 0 || k < 0 || k > n) {
        raise(ErrorCode::InvalidArgument, "summation formula needs p >= 1, r >= 0, 0 <= k <= n");
    }
    if (p * (n + 1) + r > R.order()) {
        raise(ErrorCode::OrderExceeded, "summation formula needs order >= p(n+1)+r");
    }
    if (static_cast<int>(beta.size()) < n - k + 1) {
        raise(ErrorCode::InvalidArgument, "beta list too short");
    }
    const Rational lhs = R.entry(p * (n + 1) + r, (p - 1) * (n + 1) + r + k + 1);
    Rational rhs;
    for (int j = 0; j <= n - k; ++j) {
        rhs.add_product(beta[static_cast<std::size_t>(j)], R.entry(p * n + r, (p - 1) * n + r + k + j));
    }
    return make_case("summation", ints({{"p", p}, {"r", r}, {"n", n}, {"k", k}}), lhs, rhs);
}

IdentityCase check_pascal_onepth(int p, int r, int n, int k, const std::optional<BetaPerturbation> &perturb)
{
    const auto lhs = gbinom(Rational(p * (n + 1) + r), (p - 1) * (n + 1) + r + k + 1);
    auto sum_to = [&](int upper) {
        Rational s;
        for (int j = 0; j <= upper; ++j) {
            s += perturbed(gbinom(Rational(p), j), j, perturb) * gbinom(Rational(p * n + r), (p - 1) * n + r + k + j);
        }
        return s;
    };
    const auto printed = sum_to(std::min(p, n - k));
    const auto full = sum_to(n - k);
    // the two upper limits must agree; report whichever side breaks
    const auto &rhs = printed == full || printed != lhs ? printed : full;
    return make_case("pascal-onepth", ints({{"p", p}, {"r", r}, {"n", n}, {"k", k}}), lhs, rhs);
}

IdentityCase check_fibonacci_catalan(int p, int r, int n, int k, const std::optional<BetaPerturbation> &perturb)
{
    const long K = static_cast<long>(p - 1) * (n + 1) + r + k + 1;
    Rational lhs;
    for (long j = 0; j <= n - k; ++j) {
        lhs += fib(n - k - j) * catalan_power(K, j);
    }
    Rational rhs;
    for (long i = 0; i <= n - k; ++i) {
        const long Ki = static_cast<long>(p - 1) * n + r + k + i;
        rhs += perturbed(gbinom(Rational(p + i - 1), i), static_cast<int>(i), perturb) * fib_catalan_entry(Ki + n - k - i, Ki);
    }
    return make_case("fib-catalan", ints({{"p", p}, {"r", r}, {"n", n}, {"k", k}}), lhs, rhs);
}

IdentityCase check_catalan_array(int p, int r, int n, int k, const std::optional<BetaPerturbation> &perturb)
{
    const long top = static_cast<long>(p + 1) * (n + 1) + r - k;
    const Rational lhs = Rational(static_cast<long>(p - 1) * (n + 1) + r + k + 2, top) * gbinom(Rational(top), n - k);
    Rational rhs;
    for (long j = 0; j <= n - k; ++j) {
        const long upper = static_cast<long>(p + 1) * n + r - k - j + 1;
        const Rational factor(static_cast<long>(p - 1) * n + r + k + j + 1, upper);
        rhs += factor * perturbed(gbinom(Rational(p + j - 1), j), static_cast<int>(j), perturb) * gbinom(Rational(upper), n - k - j);
    }
    return make_case("catalan-array", ints({{"p", p}, {"r", r}, {"n", n}, {"k", k}}), lhs, rhs);
}

IdentityCase check_chu_vandermonde(int n, int k, int s)
{
    if (!(k >= s && s >= 1)) {
        raise(ErrorCode::InvalidArgument, "Chu-Vandermonde needs k >= s >= 1");
    }
    Rational lhs;
    for (int j = s; j <= n; ++j) {
        lhs += gbinom(Rational(n - j), k - s) * gbinom(Rational(j - 1), s - 1);
    }
    return make_case("chu-vandermonde", ints({{"n", n}, {"k", k}, {"s", s}}), lhs, gbinom(Rational(n), k));
}

IdentityCase check_fuss_convolution(int p, int r, int n, int k, int s)
{
    if (!(k >= s && s >= 1)) {
        raise(ErrorCode::InvalidArgument, "Fuss convolution needs k >= s >= 1");
    }
    Rational lhs;
    for (int j = s; j <= n; ++j) {
        lhs += Rational(s, j) * gbinom(Rational(p * j), j - s) * gbinom(Rational(p * (n - j) + r), n - j - k + s);
    }
    return make_case("fuss-convolution", ints({{"p", p}, {"r", r}, {"n", n}, {"k", k}, {"s", s}}), lhs,
                     gbinom(Rational(p * n + r), n - k));
}

IdentityCase check_fuss_convolution_s1(int p, int r, int n, int k)
{
    Rational lhs;
    for (int j = 1; j <= n; ++j) {
        lhs += Rational(1, p * j + 1) * gbinom(Rational(p * j + 1), j) * gbinom(Rational(p * (n - j) + r), n - j - k + 1);
    }
    return make_case("fuss-convolution-s1", ints({{"p", p}, {"r", r}, {"n", n}, {"k", k}}), lhs, gbinom(Rational(p * n + r), n - k));
}

IdentityCase check_fuss_convolution_shifted(int p, int r, int n, int k)
{
    Rational lhs;
    for (int j = 0; j <= n; ++j) {
        lhs += Rational(1, p * j + 1) * gbinom(Rational(p * j + 1), j) * gbinom(Rational(p * (n - j) + r), n - j - k + 1);
    }
    return make_case("fuss-convolution-shifted", ints({{"p", p}, {"r", r}, {"n", n}, {"k", k}}), lhs,
                     gbinom(Rational(p * n + r + 1), n - k + 1));
}

IdentityCase check_gkp562(const Rational &x, const Rational &y, const Rational &p, int n)
{
    std::vector<Param> params{{"x", x}, {"y", y}, {"p", p}, {"n", Rational(n)}};
    Rational lhs;
    for (int i = 0; i <= n; ++i) {
        const Rational top = x + p * Rational(i);
        if (top.is_zero()) {
            return singular_case("gkp-562", std::move(params));
        }
        lhs += x / top * gbinom(top, i) * gbinom(y + p * Rational(n - i), n - i);
    }
    return make_case("gkp-562", std::move(params), lhs, gbinom(x + y + p * Rational(n), n));
}

IdentityCase check_gould(const Rational &r, const Rational &q, const Rational &pp, int n)
{
    std::vector<Param> params{{"r", r}, {"q", q}, {"p", pp}, {"n", Rational(n)}};
    Rational lhs;
    for (int i = 0; i <= n; ++i) {
        const Rational top = r - q * Rational(i);
        if (top.is_zero()) {
            return singular_case("gould", std::move(params));
        }
        lhs += r / top * gbinom(top, i) * gbinom(pp + q * Rational(i), n - i);
    }
    return make_case("gould", std::move(params), lhs, gbinom(r + pp, n));
}

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &d : suites()) {
            out.push_back(d.name);
        }
        return out;
    }();
    return names;
}

bool is_suite_name(const std::string &name)
{
    const auto &n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

IdentityReport run_suite(const std::string &name, const SuiteBounds &bounds, const CaseCallback &on_case)
{
    const auto &defs = suites();
    const auto it = std::find_if(defs.begin(), defs.end(), [&](const SuiteDef &d) { return d.name == name; });
    if (it == defs.end()) {
        raise(ErrorCode::UnknownName, "unknown suite '" + name + "'");
    }
    if (bounds.p_max < 1 || bounds.r_max < 0 || bounds.n_max < 0 || bounds.order < 1) {
        raise(ErrorCode::InvalidArgument, "suite bounds must be positive");
    }
    Recorder rec(name, describe(it->grid, bounds), on_case);
    it->sweep(bounds, rec);
    return rec.take();
}

std::vector<IdentityReport> run_suite(const std::vector<std::string> &names, const SuiteBounds &bounds, const CaseCallback &on_case)
{
    for (const auto &n : names) {
        if (!is_suite_name(n)) {
            raise(ErrorCode::UnknownName, "unknown suite '" + n + "'");
        }
    }
    std::vector<IdentityReport> out;
    for (const auto &n : names) {
        out.push_back(run_suite(n, bounds, on_case));
    }
    return out;
}

} // namespace riordan::identities
