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

#ifndef RIORDAN_ERRORS_HPP
#define RIORDAN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace riordan
{

enum class ErrorCode {
    DivisionByZero,
    NonUnitDivisor,
    NonzeroConstantTerm,
    NotRevertible,
    NonUnitConstant,
    OrderExceeded,
    NotDivisibleByT,
    NotRiordan,
    UnnormalizedG,
    InsufficientDerivatives,
    InvalidArgument,
    UnknownName,
    Syntax,
};

std::string_view to_string(ErrorCode code) noexcept;

// Base of every error raised by the library. The code is stable and is what
// callers (and the CLI exit-code mapping) should dispatch on.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept
    {
        return code_;
    }

private:
    ErrorCode code_;
};

class SyntaxError : public Error
{
public:
    SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string &what)
        : Error(ErrorCode::Syntax, what), offset_(offset), expected_(std::move(expected))
    {
    }

    // Byte offset into the source text.
    std::size_t offset() const noexcept
    {
        return offset_;
    }
    const std::vector<std::string> &expected() const noexcept
    {
        return expected_;
    }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

// Raised while evaluating a parsed expression. Keeps the code of the
// underlying series error and names the offending sub-expression.
class SemanticError : public Error
{
public:
    SemanticError(ErrorCode code, std::string subexpr, const std::string &what)
        : Error(code, what), subexpr_(std::move(subexpr))
    {
    }

    const std::string &subexpression() const noexcept
    {
        return subexpr_;
    }

private:
    std::string subexpr_;
};

[[noreturn]] void raise(ErrorCode code, const std::string &detail);

} // namespace riordan

#endif
