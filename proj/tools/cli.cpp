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

#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "riordan/array.hpp"
#include "riordan/bell.hpp"
#include "riordan/catalog.hpp"
#include "riordan/errors.hpp"
#include "riordan/gfparse.hpp"
#include "riordan/identities.hpp"
#include "riordan/onepth.hpp"

namespace riordan::cli
{

namespace
{

using json = nlohmann::ordered_json;

enum class Format { Table, Csv, Jsonl };

// One-pth parents are rebuilt at whatever order the requested rows need,
// up to this bound.
constexpr int kMaxParentOrder = 400;

struct Source {
    std::string label;
    std::function<RiordanArray(int)> build;
};

Source resolve_source(const std::string &spec)
{
    if (catalog::is_array_name(spec)) {
        const auto &entry = catalog::array_by_name(spec);
        return {spec, entry.build};
    }
    if (!spec.empty() && spec.find('(') != std::string::npos) {
        auto [g, f] = gf::parse_pair(spec);
        return {spec, [g, f](int order) { return RiordanArray(gf::eval(g, order), gf::eval(f, order)); }};
    }
    raise(ErrorCode::UnknownName, "unknown array '" + spec + "' (expected a catalog name or \"(G, F)\")");
}

struct SourceOptions {
    std::string positional;
    std::string g;
    std::string f;

    void add_to(CLI::App *cmd)
    {
        cmd->add_option("source", positional, "catalog array name or \"(G, F)\"");
        cmd->add_option("--g", g, "expression for g");
        cmd->add_option("--f", f, "expression for f");
    }

    Source resolve() const
    {
        const bool exprs = !g.empty() || !f.empty();
        if (exprs && !positional.empty()) {
            raise(ErrorCode::InvalidArgument, "give either a source or --g/--f, not both");
        }
        if (exprs) {
            const auto ge = gf::parse(g.empty() ? "1" : g);
            const auto fe = gf::parse(f.empty() ? "t" : f);
            return {"(" + gf::render(ge) + ", " + gf::render(fe) + ")",
                    [ge, fe](int order) { return RiordanArray(gf::eval(ge, order), gf::eval(fe, order)); }};
        }
        if (positional.empty()) {
            raise(ErrorCode::InvalidArgument, "no array given");
        }
        return resolve_source(positional);
    }
};

void check_rows(int rows, int order)
{
    if (rows < 1) {
        raise(ErrorCode::InvalidArgument, "--rows must be positive");
    }
    if (rows - 1 > order) {
        raise(ErrorCode::OrderExceeded, std::to_string(rows) + " rows need order " + std::to_string(rows - 1) + ", have " + std::to_string(order));
    }
}

void print_matrix(const Matrix &m, Format format, std::ostream &out, int first_row = 0)
{
    const int rows = m.rows();
    switch (format) {
    case Format::Csv:
        out << "n,k,value\n";
        for (int n = first_row; n < rows; ++n) {
            for (int k = first_row; k <= n; ++k) {
                out << n << ',' << k << ',' << m(n, k).str() << '\n';
            }
        }
        return;
    case Format::Jsonl:
        for (int n = first_row; n < rows; ++n) {
            for (int k = first_row; k <= n; ++k) {
                out << json{{"n", n}, {"k", k}, {"value", m(n, k).str()}}.dump() << '\n';
            }
        }
        return;
    case Format::Table:
        break;
    }
    std::vector<std::size_t> width(static_cast<std::size_t>(rows), 1);
    for (int n = first_row; n < rows; ++n) {
        for (int k = first_row; k < rows; ++k) {
            width[static_cast<std::size_t>(k)] = std::max(width[static_cast<std::size_t>(k)], m(n, k).str().size());
        }
    }
    for (int n = first_row; n < rows; ++n) {
        for (int k = first_row; k < rows; ++k) {
            const auto s = m(n, k).str();
            if (k > first_row) {
                out << ' ';
            }
            out << std::string(width[static_cast<std::size_t>(k)] - s.size(), ' ') << s;
        }
        out << '\n';
    }
}

void print_series(const std::string &label, const PowerSeries &s, Format format, std::ostream &out, bool header = true)
{
    switch (format) {
    case Format::Table:
        out << label << ": " << to_string(s) << '\n';
        return;
    case Format::Csv:
        if (header) {
            out << "series,n,value\n";
        }
        for (int n = 0; n <= s.order(); ++n) {
            out << '"' << label << "\"," << n << ',' << s[n].str() << '\n';
        }
        return;
    case Format::Jsonl:
        for (int n = 0; n <= s.order(); ++n) {
            out << json{{"series", label}, {"n", n}, {"value", s[n].str()}}.dump() << '\n';
        }
        return;
    }
}

std::vector<Rational> parse_rational_list(const std::string &text)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(Rational::parse(item));
    }
    if (out.empty()) {
        raise(ErrorCode::InvalidArgument, "empty list");
    }
    return out;
}

std::string params_text(const identities::IdentityCase &c)
{
    std::string s;
    for (const auto &p : c.params) {
        s += (s.empty() ? "" : ";") + p.name + "=" + p.value.str();
    }
    return s;
}

json case_record(const std::string &suite, const identities::IdentityCase &c)
{
    json params = json::object();
    for (const auto &p : c.params) {
        params[p.name] = p.value.str();
    }
    return json{{"suite", suite}, {"name", c.name}, {"params", params}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}, {"pass", c.pass}};
}

void print_case(const std::string &suite, const identities::IdentityCase &c, Format format, std::ostream &out)
{
    switch (format) {
    case Format::Jsonl:
        out << case_record(suite, c).dump() << '\n';
        return;
    case Format::Csv:
        out << suite << ',' << c.name << ",\"" << params_text(c) << "\"," << c.lhs.str() << ',' << c.rhs.str() << ','
            << (c.pass ? "true" : "false") << '\n';
        return;
    case Format::Table:
        out << "  " << (c.pass ? "ok  " : "FAIL") << ' ' << c.name << " [" << params_text(c) << "] lhs=" << c.lhs.str()
            << " rhs=" << c.rhs.str() << '\n';
        return;
    }
}

struct Context {
    int order = kDefaultOrder;
    Format format = Format::Table;
    std::ostream &out;
    std::ostream &err;
};

int cmd_show(const Context &ctx, const SourceOptions &src, int rows)
{
    check_rows(rows, ctx.order);
    const auto a = src.resolve().build(ctx.order);
    print_matrix(a.matrix(rows), ctx.format, ctx.out);
    return kOk;
}

int cmd_inverse(const Context &ctx, const SourceOptions &src, int rows)
{
    check_rows(rows, ctx.order);
    const auto a = inverse(src.resolve().build(ctx.order));
    print_matrix(a.matrix(rows), ctx.format, ctx.out);
    return kOk;
}

int cmd_multiply(const Context &ctx, const std::vector<std::string> &sources, int rows)
{
    if (sources.size() != 2) {
        raise(ErrorCode::InvalidArgument, "multiply takes exactly two arrays");
    }
    check_rows(rows, ctx.order);
    const auto a = resolve_source(sources[0]).build(ctx.order);
    const auto b = resolve_source(sources[1]).build(ctx.order);
    print_matrix(multiply(a, b).matrix(rows), ctx.format, ctx.out);
    return kOk;
}

struct OnePthOptions {
    int p = 2;
    int r = 0;
    std::string orientation = "vertical";
    int rows = 6;
    bool check_oracle = false;
    std::string corrupt;
};

int cmd_onepth(const Context &ctx, const SourceOptions &src, const OnePthOptions &opt)
{
    const OnePthSpec spec{opt.p, opt.r, parse_orientation(opt.orientation)};
    if (spec.p < 1 || spec.r < 0) {
        raise(ErrorCode::InvalidArgument, "need p >= 1 and r >= 0");
    }
    if (opt.rows < 1) {
        raise(ErrorCode::InvalidArgument, "--rows must be positive");
    }
    const int parent_order = std::max(ctx.order, required_parent_order(spec, opt.rows));
    if (parent_order > kMaxParentOrder) {
        raise(ErrorCode::OrderExceeded, "rows need parent order " + std::to_string(parent_order) + ", limit is " + std::to_string(kMaxParentOrder));
    }
    ctx.err << "parent order " << parent_order << '\n';
    const auto parent = src.resolve().build(parent_order);
    auto built = onepth_rows(parent, spec, opt.rows).matrix(opt.rows);
    if (!opt.corrupt.empty()) {
        const auto comma = opt.corrupt.find(',');
        if (comma == std::string::npos) {
            raise(ErrorCode::InvalidArgument, "--corrupt-entry takes n,k");
        }
        const int n = std::stoi(opt.corrupt.substr(0, comma));
        const int k = std::stoi(opt.corrupt.substr(comma + 1));
        if (n < 0 || k < 0 || k > n || n >= opt.rows) {
            raise(ErrorCode::InvalidArgument, "--corrupt-entry outside the printed rows");
        }
        built(n, k) += Rational(1);
    }
    print_matrix(built, ctx.format, ctx.out);
    if (!opt.check_oracle) {
        return kOk;
    }
    const auto expected = oracle(parent, spec, opt.rows);
    for (int n = 0; n < opt.rows; ++n) {
        for (int k = 0; k <= n; ++k) {
            if (built(n, k) != expected(n, k)) {
                ctx.out << "MISMATCH at (" << n << "," << k << "): generating function " << built(n, k).str() << ", index extraction "
                        << expected(n, k).str() << '\n';
                return kIdentityFailure;
            }
        }
    }
    ctx.out << "MATCH\n";
    return kOk;
}

struct ASeqOptions {
    bool formula = false;
    int p = 2;
    int r = 0;
    std::string orientation = "vertical";
};

int cmd_aseq(const Context &ctx, const SourceOptions &src, const ASeqOptions &opt)
{
    const auto source = src.resolve();
    if (!opt.formula) {
        const auto a = source.build(ctx.order);
        print_series("A", a_sequence(a), ctx.format, ctx.out);
        if (a.g()[0] == Rational(1)) {
            print_series("Z", z_sequence(a), ctx.format, ctx.out, false);
        }
        return kOk;
    }
    const auto orientation = parse_orientation(opt.orientation);
    // the one-pth array loses one order, its A-sequence one more
    const auto parent = source.build(ctx.order + 2);
    const auto sub = onepth(parent, {opt.p, opt.r, orientation});
    const auto computed = a_sequence(sub).truncate(ctx.order);
    const auto expected = a_seq_formula(parent, opt.p, orientation).truncate(ctx.order);
    print_series("A", computed, ctx.format, ctx.out);
    print_series(orientation == Orientation::Vertical ? "(f/t)^(p-1)" : "A^p", expected, ctx.format, ctx.out, false);
    const bool same = computed == expected;
    ctx.out << (same ? "EQUAL" : "DIFFERENT") << '\n';
    return same ? kOk : kIdentityFailure;
}

struct IdentityOptions {
    std::vector<std::string> suites;
    identities::SuiteBounds bounds;
    std::string r_grid;
    std::string perturb;
    bool verbose = false;
};

int cmd_identities(const Context &ctx, IdentityOptions opt)
{
    for (const auto &s : opt.suites) {
        if (!identities::is_suite_name(s)) {
            raise(ErrorCode::UnknownName, "unknown suite '" + s + "'");
        }
    }
    const auto names = opt.suites.empty() ? identities::suite_names() : opt.suites;
    opt.bounds.order = ctx.order;
    if (!opt.r_grid.empty()) {
        opt.bounds.rational_grid = parse_rational_list(opt.r_grid);
    }
    if (!opt.perturb.empty()) {
        identities::BetaPerturbation bp;
        const auto colon = opt.perturb.find(':');
        if (colon == std::string::npos) {
            bp.delta = Rational::parse(opt.perturb);
        } else {
            bp.index = std::stoi(opt.perturb.substr(0, colon));
            bp.delta = Rational::parse(opt.perturb.substr(colon + 1));
        }
        opt.bounds.perturb = bp;
    }
    if (ctx.format == Format::Csv) {
        ctx.out << "suite,name,params,lhs,rhs,pass\n";
    }
    const bool table = ctx.format == Format::Table;
    auto on_case = [&](const std::string &suite, const identities::IdentityCase &c) {
        if (c.singular || table) {
            return;
        }
        if (opt.verbose || !c.pass) {
            print_case(suite, c, ctx.format, ctx.out);
        }
    };
    bool all_pass = true;
    for (const auto &name : names) {
        const auto rep = identities::run_suite(name, opt.bounds, on_case);
        all_pass = all_pass && rep.ok();
        auto &summary = table ? ctx.out : ctx.err;
        summary << (rep.ok() ? "PASS " : "FAIL ") << rep.name << ": " << rep.passed << '/' << rep.total << " passed";
        if (rep.skipped > 0) {
            summary << ", " << rep.skipped << " singular skipped";
        }
        summary << " (" << rep.grid << ")\n";
        if (table && rep.first_failure) {
            summary << "  first counterexample:\n";
            print_case(rep.name, *rep.first_failure, Format::Table, summary);
        }
    }
    return all_pass ? kOk : kIdentityFailure;
}

struct BellOptions {
    std::string x;
    std::string series;
    int n = 0;
    int k = 0;
    int rows = 7;
    bool partitions = false;
};

int cmd_bell(const Context &ctx, const BellOptions &opt)
{
    if (opt.partitions) {
        if (opt.n < 1) {
            raise(ErrorCode::InvalidArgument, "--partitions needs --n");
        }
        const auto list = opt.k > 0 ? partitions(opt.n, opt.k) : partitions(opt.n);
        if (ctx.format == Format::Csv) {
            ctx.out << "n,k,parts\n";
        }
        for (const auto &pv : list) {
            std::string parts;
            for (int i = opt.n; i >= 1; --i) {
                for (int c = 0; c < pv.multiplicity(i); ++c) {
                    parts += (parts.empty() ? "" : "+") + std::to_string(i);
                }
            }
            if (ctx.format == Format::Jsonl) {
                ctx.out << json{{"n", pv.n}, {"k", pv.parts}, {"counts", pv.counts}}.dump() << '\n';
            } else if (ctx.format == Format::Csv) {
                ctx.out << pv.n << ',' << pv.parts << ',' << parts << '\n';
            } else {
                ctx.out << parts << '\n';
            }
        }
        return kOk;
    }
    if (opt.x.empty() == opt.series.empty()) {
        raise(ErrorCode::InvalidArgument, "give exactly one of --x and --series");
    }
    std::vector<Rational> x;
    std::optional<PowerSeries> f;
    if (!opt.x.empty()) {
        x = parse_rational_list(opt.x);
    } else {
        f = gf::eval(opt.series, ctx.order);
        for (int i = 1; i <= f->order(); ++i) {
            x.push_back(factorial(i) * (*f)[i]);
        }
    }
    auto value = [&](int n, int k) {
        if (n == 0 || k == 0) {
            return Rational(n == k ? 1 : 0);
        }
        return f ? bell_via_series(*f, n, k) : bell_polynomial(n, k, x);
    };
    if (opt.n > 0 || opt.k > 0) {
        if (opt.k < 1 || opt.k > opt.n) {
            raise(ErrorCode::InvalidArgument, "need 1 <= k <= n");
        }
        if (opt.n - opt.k + 1 > static_cast<int>(x.size())) {
            raise(ErrorCode::OrderExceeded, "B_{n,k} needs n - k + 1 arguments");
        }
        ctx.out << value(opt.n, opt.k).str() << '\n';
        return kOk;
    }
    const int rows = std::min(opt.rows, static_cast<int>(x.size()) + 1);
    Matrix m(rows);
    for (int n = 0; n < rows; ++n) {
        for (int k = 0; k <= n; ++k) {
            m(n, k) = value(n, k);
        }
    }
    print_matrix(m, ctx.format, ctx.out);
    return kOk;
}

int cmd_series(const Context &ctx, const std::string &spec)
{
    const auto s = catalog::is_series_name(spec) ? catalog::series_by_name(spec, ctx.order) : gf::eval(spec, ctx.order);
    print_series(spec, s, ctx.format, ctx.out);
    return kOk;
}

int exit_code_for(const Error &e)
{
    return e.code() == ErrorCode::OrderExceeded ? kOrderExceeded : kUsage;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact Riordan array toolkit", "riordan"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all", "expand every subcommand's help");

    int order = kDefaultOrder;
    std::string format = "table";
    app.add_option("--order", order, "truncation order of every series")->check(CLI::Range(1, kMaxParentOrder))->capture_default_str();
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "csv", "jsonl"}))->capture_default_str();

    int rows = 6;
    SourceOptions show_src, inverse_src, onepth_src, aseq_src;

    auto *show = app.add_subcommand("show", "print the leading block of an array");
    show_src.add_to(show);
    show->add_option("--rows", rows, "number of rows")->capture_default_str();

    auto *inv = app.add_subcommand("inverse", "print the inverse array");
    inverse_src.add_to(inv);
    inv->add_option("--rows", rows, "number of rows")->capture_default_str();

    std::vector<std::string> pair;
    auto *mult = app.add_subcommand("multiply", "print the product of two arrays");
    mult->add_option("arrays", pair, "two catalog names or \"(G, F)\" pairs")->required()->expected(2);
    mult->add_option("--rows", rows, "number of rows")->capture_default_str();

    OnePthOptions op;
    auto *one = app.add_subcommand("onepth", "one-pth (p, r) subarray built from generating functions");
    onepth_src.add_to(one);
    one->add_option("-p", op.p, "step p >= 1")->capture_default_str();
    one->add_option("-r", op.r, "offset r >= 0")->capture_default_str();
    one->add_option("--orientation", op.orientation, "vertical or horizontal")
        ->check(CLI::IsMember({"vertical", "horizontal"}))
        ->capture_default_str();
    one->add_option("--rows", op.rows, "number of rows")->capture_default_str();
    one->add_flag("--check-oracle", op.check_oracle, "compare with direct index extraction");
    one->add_option("--corrupt-entry", op.corrupt, "add 1 to entry n,k before the oracle check (negative control)");

    ASeqOptions ao;
    auto *aseq = app.add_subcommand("aseq", "A- and Z-sequences");
    aseq_src.add_to(aseq);
    aseq->add_flag("--formula", ao.formula, "compare the one-pth A-sequence with its closed form");
    aseq->add_option("-p", ao.p, "step p for --formula")->capture_default_str();
    aseq->add_option("-r", ao.r, "offset r for --formula")->capture_default_str();
    aseq->add_option("--orientation", ao.orientation, "vertical or horizontal")
        ->check(CLI::IsMember({"vertical", "horizontal"}))
        ->capture_default_str();

    IdentityOptions io;
    auto *ids = app.add_subcommand("identities", "run identity suites");
    ids->add_option("--suite", io.suites, "suite name (repeatable; default all)");
    ids->add_option("--p-max", io.bounds.p_max, "largest p")->capture_default_str();
    ids->add_option("--r-max", io.bounds.r_max, "largest r")->capture_default_str();
    ids->add_option("--n-max", io.bounds.n_max, "largest n")->capture_default_str();
    ids->add_option("--r-grid", io.r_grid, "comma-separated rationals for the rational suites");
    ids->add_option("--perturb-beta", io.perturb, "j:delta, add delta to beta_j (negative control)");
    ids->add_flag("--verbose", io.verbose, "emit every grid point");

    BellOptions bo;
    auto *bell = app.add_subcommand("bell", "partial Bell polynomials and partitions");
    bell->add_option("--x", bo.x, "comma-separated x_1, x_2, ...");
    bell->add_option("--series", bo.series, "f with f(0) = 0; uses x_i = i! [t^i] f");
    bell->add_option("--n", bo.n, "n");
    bell->add_option("--k", bo.k, "k");
    bell->add_option("--rows", bo.rows, "rows of the B_{n,k} triangle")->capture_default_str();
    bell->add_flag("--partitions", bo.partitions, "list the partitions of n (into k parts if --k)");

    std::string series_spec;
    auto *ser = app.add_subcommand("series", "expand a generating function");
    ser->add_option("expr", series_spec, "expression or catalog series name")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    Context ctx{order, format == "csv" ? Format::Csv : (format == "jsonl" ? Format::Jsonl : Format::Table), out, err};
    try {
        if (*show) {
            return cmd_show(ctx, show_src, rows);
        }
        if (*inv) {
            return cmd_inverse(ctx, inverse_src, rows);
        }
        if (*mult) {
            return cmd_multiply(ctx, pair, rows);
        }
        if (*one) {
            return cmd_onepth(ctx, onepth_src, op);
        }
        if (*aseq) {
            return cmd_aseq(ctx, aseq_src, ao);
        }
        if (*ids) {
            return cmd_identities(ctx, io);
        }
        if (*bell) {
            return cmd_bell(ctx, bo);
        }
        if (*ser) {
            return cmd_series(ctx, series_spec);
        }
    } catch (const SyntaxError &e) {
        err << "syntax error " << e.what() << '\n';
        return kUsage;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::invalid_argument &e) {
        err << "error: bad number: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range &e) {
        err << "error: number out of range: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace riordan::cli
