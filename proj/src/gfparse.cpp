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

#include "riordan/gfparse.hpp"

#include <algorithm>
#include <cctype>

#include "riordan/catalog.hpp"
#include "riordan/errors.hpp"

namespace riordan::gf
{

namespace
{

const std::vector<std::string> kOperand{"number", "t", "identifier", "(", "-"};

class Parser
{
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Expr expression()
    {
        skip();
        Expr lhs = term();
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') {
                return lhs;
            }
            const auto at = pos_;
            ++pos_;
            lhs = binary(c == '+' ? NodeKind::Add : NodeKind::Sub, std::move(lhs), term());
            lhs.offset = at;
        }
    }

    void expect(char c)
    {
        if (peek() != c) {
            fail({std::string(1, c)});
        }
        ++pos_;
    }

    void finish(std::vector<std::string> expected)
    {
        if (peek() != '\0') {
            fail(std::move(expected));
        }
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        std::string what = "at offset " + std::to_string(pos_) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            what += (i ? ", " : "") + expected[i];
        }
        what += pos_ < src_.size() ? ", found '" + std::string(1, src_[pos_]) + "'" : ", found end of input";
        throw SyntaxError(pos_, std::move(expected), what);
    }

    char peek()
    {
        skip();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

private:
    Expr term()
    {
        Expr lhs = signed_factor();
        for (;;) {
            const char c = peek();
            if (c != '*' && c != '/') {
                return lhs;
            }
            const auto at = pos_;
            ++pos_;
            lhs = binary(c == '*' ? NodeKind::Mul : NodeKind::Div, std::move(lhs), signed_factor());
            lhs.offset = at;
        }
    }

    Expr signed_factor()
    {
        if (peek() == '-') {
            const auto at = pos_;
            ++pos_;
            auto e = unary(NodeKind::Neg, signed_factor());
            e.offset = at;
            return e;
        }
        if (peek() == '+') {
            ++pos_;
            return signed_factor();
        }
        return power_expr();
    }

    Expr power_expr()
    {
        Expr base = primary();
        if (peek() != '^') {
            return base;
        }
        const auto at = pos_;
        ++pos_;
        Rational exponent;
        if (peek() == '(') {
            ++pos_;
            exponent = signed_literal();
            expect(')');
        } else {
            exponent = signed_literal();
        }
        auto e = power(std::move(base), exponent);
        e.offset = at;
        return e;
    }

    Rational signed_literal()
    {
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = src_[pos_] == '-';
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            fail({"number"});
        }
        const auto v = literal();
        return negative ? -v : v;
    }

    // integer, or integer '/' integer read as one rational literal
    Rational literal()
    {
        const mpz_class num(digits());
        const auto save = pos_;
        if (peek() == '/') {
            ++pos_;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                const auto den_at = pos_;
                const mpz_class den(digits());
                if (den == 0) {
                    pos_ = den_at;
                    fail({"nonzero denominator"});
                }
                return Rational(num, den);
            }
        }
        pos_ = save;
        return Rational(num);
    }

    std::string digits()
    {
        const auto start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
        return std::string(src_.substr(start, pos_ - start));
    }

    std::string identifier()
    {
        const auto start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            ++pos_;
        }
        if (pos_ < src_.size() && src_[pos_] == ':') {
            ++pos_;
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                fail({"digit"});
            }
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
            }
        }
        return std::string(src_.substr(start, pos_ - start));
    }

    Expr primary()
    {
        const char c = peek();
        const auto at = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = number(literal());
            e.offset = at;
            return e;
        }
        if (c == '(') {
            ++pos_;
            auto e = expression();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const auto id = identifier();
            Expr e;
            if (id == "t") {
                e = var();
            } else if (id == "sqrt") {
                expect('(');
                e = unary(NodeKind::Sqrt, expression());
                expect(')');
            } else if (id == "compose") {
                expect('(');
                auto outer = expression();
                expect(',');
                auto inner = expression();
                expect(')');
                e = binary(NodeKind::Compose, std::move(outer), std::move(inner));
            } else {
                e = name(id);
            }
            e.offset = at;
            return e;
        }
        fail(kOperand);
    }

    void skip()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

bool is_number(const Expr &e)
{
    return e.kind == NodeKind::Number;
}

std::string render_exponent(const Rational &v)
{
    return v.is_integer() && v.sign() >= 0 ? v.str() : "(" + v.str() + ")";
}

std::string catalog_name(const std::string &id)
{
    std::string out = id;
    for (auto &c : out) {
        if (c == '_') {
            c = '-';
        }
    }
    return out;
}

[[noreturn]] void semantic(const Error &e, const Expr &node)
{
    throw SemanticError(e.code(), render(node), std::string(e.what()) + " in " + render(node));
}

PowerSeries divide(const PowerSeries &a, const PowerSeries &b)
{
    if (!b[0].is_zero()) {
        return div(a, b);
    }
    const int d = b.valuation();
    if (d < 0) {
        raise(ErrorCode::DivisionByZero, "denominator vanishes to working order");
    }
    if (a.order() < d) {
        return PowerSeries::zero(0);
    }
    for (int i = 0; i < d; ++i) {
        if (!a[i].is_zero()) {
            raise(ErrorCode::NotDivisibleByT, "numerator is not divisible by t^" + std::to_string(d));
        }
    }
    return div(shift(a, -d), shift(b, -d));
}

PowerSeries eval_node(const Expr &e, int order)
{
    try {
        switch (e.kind) {
        case NodeKind::Number:
            return PowerSeries::constant(e.value, order);
        case NodeKind::Var:
            return PowerSeries::t(order);
        case NodeKind::Name:
            return catalog::series_by_name(catalog_name(e.name), order);
        default:
            break;
        }
        std::vector<PowerSeries> args;
        for (const auto &c : e.children) {
            args.push_back(eval_node(c, order));
        }
        switch (e.kind) {
        case NodeKind::Add:
            return add(args[0], args[1]);
        case NodeKind::Sub:
            return sub(args[0], args[1]);
        case NodeKind::Mul:
            return mul(args[0], args[1]);
        case NodeKind::Div:
            return divide(args[0], args[1]);
        case NodeKind::Neg:
            return negate(args[0]);
        case NodeKind::Pow:
            if (e.value.is_integer()) {
                return pow_int(args[0], e.value.numerator().get_si());
            }
            return pow_rational(args[0], e.value.numerator().get_si(), e.value.denominator().get_si());
        case NodeKind::Sqrt:
            return pow_rational(args[0], 1, 2);
        case NodeKind::Compose:
            return compose(args[0], args[1]);
        default:
            break;
        }
    } catch (const SemanticError &) {
        throw;
    } catch (const Error &err) {
        semantic(err, e);
    }
    raise(ErrorCode::InvalidArgument, "malformed expression");
}

} // namespace

Expr number(const Rational &v)
{
    Expr e;
    e.kind = NodeKind::Number;
    e.value = v;
    return e;
}

Expr var()
{
    Expr e;
    e.kind = NodeKind::Var;
    return e;
}

Expr name(std::string id)
{
    Expr e;
    e.kind = NodeKind::Name;
    e.name = std::move(id);
    return e;
}

Expr unary(NodeKind kind, Expr operand)
{
    Expr e;
    e.kind = kind;
    e.children.push_back(std::move(operand));
    return e;
}

Expr binary(NodeKind kind, Expr lhs, Expr rhs)
{
    Expr e;
    e.kind = kind;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
}

Expr power(Expr base, const Rational &exponent)
{
    Expr e = unary(NodeKind::Pow, std::move(base));
    e.value = exponent;
    return e;
}

Expr parse(std::string_view src)
{
    Parser p(src);
    auto e = p.expression();
    p.finish({"+", "-", "*", "/", "^", "end of input"});
    return e;
}

std::pair<Expr, Expr> parse_pair(std::string_view src)
{
    Parser p(src);
    p.expect('(');
    auto g = p.expression();
    p.expect(',');
    auto f = p.expression();
    p.expect(')');
    p.finish({"end of input"});
    return {std::move(g), std::move(f)};
}

std::string render(const Expr &e)
{
    switch (e.kind) {
    case NodeKind::Number:
        return e.value.is_integer() && e.value.sign() >= 0 ? e.value.str() : "(" + e.value.str() + ")";
    case NodeKind::Var:
        return "t";
    case NodeKind::Name:
        return e.name;
    case NodeKind::Add:
        return "(" + render(e.children[0]) + "+" + render(e.children[1]) + ")";
    case NodeKind::Sub:
        return "(" + render(e.children[0]) + "-" + render(e.children[1]) + ")";
    case NodeKind::Mul:
        return "(" + render(e.children[0]) + "*" + render(e.children[1]) + ")";
    case NodeKind::Div: {
        // a bare integer after '/' would fuse into a rational literal
        const auto &d = e.children[1];
        const auto den = d.kind == NodeKind::Number && d.value.is_integer() && d.value.sign() >= 0 ? "(" + render(d) + ")" : render(d);
        return "(" + render(e.children[0]) + "/" + den + ")";
    }
    case NodeKind::Neg:
        return "(-" + render(e.children[0]) + ")";
    case NodeKind::Pow:
        return "(" + render(e.children[0]) + "^" + render_exponent(e.value) + ")";
    case NodeKind::Sqrt:
        return "sqrt(" + render(e.children[0]) + ")";
    case NodeKind::Compose:
        return "compose(" + render(e.children[0]) + "," + render(e.children[1]) + ")";
    }
    return {};
}

Expr fold(const Expr &e)
{
    Expr out = e;
    for (auto &c : out.children) {
        c = fold(c);
    }
    if (out.children.empty() || !std::all_of(out.children.begin(), out.children.end(), is_number)) {
        return out;
    }
    const auto &a = out.children[0].value;
    try {
        switch (out.kind) {
        case NodeKind::Add:
            return number(a + out.children[1].value);
        case NodeKind::Sub:
            return number(a - out.children[1].value);
        case NodeKind::Mul:
            return number(a * out.children[1].value);
        case NodeKind::Div:
            return number(a / out.children[1].value);
        case NodeKind::Neg:
            return number(-a);
        case NodeKind::Pow:
            if (out.value.is_integer()) {
                return number(a.pow(out.value.numerator().get_si()));
            }
            return out;
        default:
            return out;
        }
    } catch (const Error &err) {
        semantic(err, e);
    }
}

PowerSeries eval(const Expr &e, int order)
{
    if (order < 0) {
        raise(ErrorCode::InvalidArgument, "negative order");
    }
    const auto folded = fold(e);
    // divisions by t^d cost d orders; raise the working order until the
    // result reaches the requested one
    int working = std::max(order, 1);
    for (int attempt = 0; attempt < 8; ++attempt) {
        const auto s = eval_node(folded, working);
        if (s.order() >= order) {
            return s.truncate(order);
        }
        working += order - s.order();
    }
    throw SemanticError(ErrorCode::OrderExceeded, render(e), "cannot reach order " + std::to_string(order) + " for " + render(e));
}

PowerSeries eval(std::string_view src, int order)
{
    return eval(parse(src), order);
}

} // namespace riordan::gf
