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

#include "riordan/errors.hpp"

namespace riordan
{

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
        case ErrorCode::DivisionByZero:
            return "DivisionByZero";
        case ErrorCode::NonUnitDivisor:
            return "NonUnitDivisor";
        case ErrorCode::NonzeroConstantTerm:
            return "NonzeroConstantTerm";
        case ErrorCode::NotRevertible:
            return "NotRevertible";
        case ErrorCode::NonUnitConstant:
            return "NonUnitConstant";
        case ErrorCode::OrderExceeded:
            return "OrderExceeded";
        case ErrorCode::NotDivisibleByT:
            return "NotDivisibleByT";
        case ErrorCode::NotRiordan:
            return "NotRiordan";
        case ErrorCode::UnnormalizedG:
            return "UnnormalizedG";
        case ErrorCode::InsufficientDerivatives:
            return "InsufficientDerivatives";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::UnknownName:
            return "UnknownName";
        case ErrorCode::Syntax:
            return "SyntaxError";
    }
    return "Unknown";
}

void raise(ErrorCode code, const std::string &detail)
{
    throw Error(code, std::string(to_string(code)) + ": " + detail);
}

} // namespace riordan
