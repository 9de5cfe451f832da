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

#ifndef RIORDAN_GFPARSE_HPP
#define RIORDAN_GFPARSE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan::gf
{

enum class NodeKind { Number, Var, Add, Sub, Mul, Div, Neg, Pow, Sqrt, Name, Compose };

// Expression tree for the generating-function language. value holds the
// literal of a Number and the exponent of a Pow; name holds a Name.
// offset is the byte position in the source and does not take part in ==.
struct Expr {
    NodeKind kind = NodeKind::Number;
    Rational value;
    std::string name;
    std::vector<Expr> children;
    std::size_t offset = 0;

    friend bool operator==(const Expr &a, const Expr &b)
    {
        return a.kind == b.kind && a.value == b.value && a.name == b.name && a.children == b.children;
    }
};

Expr number(const Rational &v);
Expr var();
Expr name(std::string id);
Expr unary(NodeKind kind, Expr operand);
Expr binary(NodeKind kind, Expr lhs, Expr rhs);
Expr power(Expr base, const Rational &exponent);

// Throws SyntaxError with the byte offset of the first unexpected token.
Expr parse(std::string_view src);

// "(G, F)" as used for array sources on the command line.
std::pair<Expr, Expr> parse_pair(std::string_view src);

// Fully parenthesised canonical text; parse(render(e)) == e for parser output.
std::string render(const Expr &e);

// Collapses subtrees made only of numbers into a single Number.
Expr fold(const Expr &e);

// Series of the expression through t^order. Raises SemanticError carrying the
// failing sub-expression.
PowerSeries eval(const Expr &e, int order);
PowerSeries eval(std::string_view src, int order);

} // namespace riordan::gf

#endif
