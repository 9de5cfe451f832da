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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "riordan/array.hpp"
#include "riordan/bell.hpp"
#include "riordan/catalog.hpp"
#include "riordan/errors.hpp"
#include "riordan/gfparse.hpp"
#include "riordan/identities.hpp"
#include "riordan/onepth.hpp"
#include "riordan/series.hpp"

namespace py = pybind11;
using namespace riordan;

// Rational <-> fractions.Fraction. Python ints and "p/q" strings also load.
namespace pybind11::detail
{
template <> struct type_caster<Rational> {
    PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool)
    {
        if (!src || PyFloat_Check(src.ptr())) {
            return false;
        }
        try {
            if (PyUnicode_Check(src.ptr())) {
                value = Rational::parse(src.cast<std::string>());
                return true;
            }
            if (!hasattr(src, "numerator") || !hasattr(src, "denominator")) {
                return false;
            }
            const auto num = py::str(src.attr("numerator")).cast<std::string>();
            const auto den = py::str(src.attr("denominator")).cast<std::string>();
            value = Rational(mpz_class(num), mpz_class(den));
            return true;
        } catch (const std::exception &) {
            return false;
        }
    }

    static handle cast(const Rational &q, return_value_policy, handle)
    {
        static const auto fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(q.str()).release();
    }
};
} // namespace pybind11::detail

namespace
{

PowerSeries to_series(const std::vector<Rational> &c)
{
    if (c.empty()) {
        raise(ErrorCode::InvalidArgument, "empty coefficient list");
    }
    return PowerSeries(c);
}

std::vector<Rational> coefficients(const PowerSeries &f)
{
    return {f.coeffs().begin(), f.coeffs().end()};
}

std::vector<std::vector<Rational>> rows_of(const Matrix &m)
{
    std::vector<std::vector<Rational>> out;
    for (int n = 0; n < m.rows(); ++n) {
        out.emplace_back();
        for (int k = 0; k <= n; ++k) {
            out.back().push_back(m(n, k));
        }
    }
    return out;
}

RiordanArray array_from_source(const std::string &source, int order)
{
    if (catalog::is_array_name(source)) {
        return catalog::array_by_name(source).build(order);
    }
    const auto [g, f] = gf::parse_pair(source);
    return RiordanArray(gf::eval(g, order), gf::eval(f, order));
}

py::dict case_dict(const identities::IdentityCase &c)
{
    py::dict params;
    for (const auto &p : c.params) {
        params[py::str(p.name)] = py::cast(p.value);
    }
    py::dict d;
    d["name"] = c.name;
    d["params"] = params;
    d["lhs"] = c.lhs;
    d["rhs"] = c.rhs;
    d["pass"] = c.pass;
    d["singular"] = c.singular;
    return d;
}

} // namespace

PYBIND11_MODULE(_riordan, m)
{
    m.doc() = "Exact Riordan array and power series kernel.";

    static py::exception<Error> base(m, "RiordanError", PyExc_ValueError);
    static py::exception<SyntaxError> syntax(m, "SyntaxError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const SyntaxError &e) {
            py::set_error(syntax, e.what());
        } catch (const Error &e) {
            py::set_error(base, e.what());
        }
    });

    m.def(
        "series", [](const std::string &expr, int order) { return coefficients(gf::eval(expr, order)); }, py::arg("expr"),
        py::arg("order") = 24, "Coefficients of a generating-function expression through t^order.");
    m.def(
        "render", [](const std::string &expr) { return gf::render(gf::parse(expr)); }, py::arg("expr"));
    m.def(
        "compose", [](const std::vector<Rational> &f, const std::vector<Rational> &g) { return coefficients(compose(to_series(f), to_series(g))); },
        py::arg("f"), py::arg("g"));
    m.def(
        "revert", [](const std::vector<Rational> &f) { return coefficients(revert(to_series(f))); }, py::arg("f"));
    m.def(
        "pow_rational", [](const std::vector<Rational> &f, const Rational &e) {
            return coefficients(pow_rational(to_series(f), e.numerator().get_si(), e.denominator().get_si()));
        },
        py::arg("f"), py::arg("exponent"));

    py::class_<RiordanArray>(m, "RiordanArray")
        .def(py::init([](const std::vector<Rational> &g, const std::vector<Rational> &f) { return RiordanArray(to_series(g), to_series(f)); }),
             py::arg("g"), py::arg("f"))
        .def_static("from_source", &array_from_source, py::arg("source"), py::arg("order") = 24,
                    "Catalog name such as 'pascal', or a '(G, F)' expression pair.")
        .def_property_readonly("g", [](const RiordanArray &a) { return coefficients(a.g()); })
        .def_property_readonly("f", [](const RiordanArray &a) { return coefficients(a.f()); })
        .def_property_readonly("order", &RiordanArray::order)
        .def("entry", [](const RiordanArray &a, int n, int k) { return Rational(a.entry(n, k)); }, py::arg("n"), py::arg("k"))
        .def("rows", [](const RiordanArray &a, int rows) { return rows_of(a.matrix(rows)); }, py::arg("rows"))
        .def("__mul__", [](const RiordanArray &a, const RiordanArray &b) { return multiply(a, b); })
        .def("inverse", [](const RiordanArray &a) { return inverse(a); })
        .def("apply", [](const RiordanArray &a, const std::vector<Rational> &d) { return coefficients(apply_ftra(a, to_series(d))); },
             py::arg("d"))
        .def("a_sequence", [](const RiordanArray &a) { return coefficients(a_sequence(a)); })
        .def("z_sequence", [](const RiordanArray &a) { return coefficients(z_sequence(a)); })
        .def("is_pseudo_involution", [](const RiordanArray &a) { return is_pseudo_involution(a); })
        .def("same", [](const RiordanArray &a, const RiordanArray &b) { return same_array(a, b); }, py::arg("other"))
        .def(
            "onepth",
            [](const RiordanArray &a, int p, int r, const std::string &orientation) { return onepth(a, {p, r, parse_orientation(orientation)}); },
            py::arg("p"), py::arg("r") = 0, py::arg("orientation") = "vertical")
        .def(
            "onepth_oracle",
            [](const RiordanArray &a, int p, int r, const std::string &orientation, int rows) {
                return rows_of(oracle(a, {p, r, parse_orientation(orientation)}, rows));
            },
            py::arg("p"), py::arg("r") = 0, py::arg("orientation") = "vertical", py::arg("rows") = 6,
            "Rows read directly off the parent by index extraction.");

    m.def("array_names", [] {
        std::vector<std::string> names;
        for (const auto &e : catalog::arrays()) {
            names.push_back(e.name);
        }
        return names;
    });

    m.def("bell_polynomial", [](int n, int k, const std::vector<Rational> &x) { return bell_polynomial(n, k, x); }, py::arg("n"),
          py::arg("k"), py::arg("x"));
    m.def(
        "partitions",
        [](int n, int k) {
            std::vector<std::vector<int>> out;
            for (const auto &pv : partitions(n, k)) {
                out.emplace_back(pv.counts.begin(), pv.counts.end());
            }
            return out;
        },
        py::arg("n"), py::arg("k"), "Multiplicity vectors (k_1, ..., k_n) of the partitions of n into k parts.");
    m.def("power_case_beta", [](const std::vector<Rational> &alpha, const Rational &p, int n) { return power_case_beta(alpha, p, n); },
          py::arg("alpha"), py::arg("p"), py::arg("n"));

    m.def("suite_names", &identities::suite_names);
    m.def(
        "run_suite",
        [](const std::string &name, int p_max, int r_max, int n_max, int order, std::optional<std::pair<int, Rational>> perturb) {
            identities::SuiteBounds b;
            b.p_max = p_max;
            b.r_max = r_max;
            b.n_max = n_max;
            b.order = order;
            if (perturb) {
                b.perturb = identities::BetaPerturbation{perturb->first, perturb->second};
            }
            const auto rep = identities::run_suite(name, b);
            py::dict d;
            d["name"] = rep.name;
            d["grid"] = rep.grid;
            d["total"] = rep.total;
            d["passed"] = rep.passed;
            d["failed"] = rep.failed;
            d["skipped"] = rep.skipped;
            d["first_failure"] = rep.first_failure ? py::object(case_dict(*rep.first_failure)) : py::none();
            return d;
        },
        py::arg("name"), py::arg("p_max") = 4, py::arg("r_max") = 3, py::arg("n_max") = 10, py::arg("order") = 24, py::arg("perturb") = py::none(),
        "Run one identity suite; perturb=(j, delta) shifts beta_j by delta.");
}
