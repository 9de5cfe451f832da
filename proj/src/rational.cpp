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

#include "riordan/rational.hpp"

#include <cctype>
#include <ostream>

#include "riordan/errors.hpp"

namespace riordan
{

Rational::Rational(const mpz_class &num, const mpz_class &den)
{
    if (den == 0) {
        raise(ErrorCode::DivisionByZero, "rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

namespace
{

bool is_integer_token(std::string_view s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        ++i;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

mpz_class to_mpz(std::string_view s)
{
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return mpz_class(std::string(s), 10);
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const auto s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_token(s)) {
            raise(ErrorCode::InvalidArgument, "not a rational literal: '" + std::string(text) + "'");
        }
        return Rational(to_mpz(s));
    }
    const auto num = trim(s.substr(0, slash));
    const auto den = trim(s.substr(slash + 1));
    if (!is_integer_token(num) || !is_integer_token(den) || den.front() == '-' || den.front() == '+') {
        raise(ErrorCode::InvalidArgument, "not a rational literal: '" + std::string(text) + "'");
    }
    return Rational(to_mpz(num), to_mpz(den));
}

std::string Rational::str() const
{
    return v_.get_str(10);
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        raise(ErrorCode::DivisionByZero, "division of " + str() + " by zero");
    }
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const
{
    if (e < 0) {
        return Rational(1) / pow(-e);
    }
    Rational r;
    mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

std::ostream &operator<<(std::ostream &os, const Rational &q)
{
    return os << q.str();
}

Rational factorial(long n)
{
    if (n < 0) {
        raise(ErrorCode::InvalidArgument, "factorial of a negative integer");
    }
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

Rational binomial(long n, long k)
{
    if (k < 0) {
        return Rational(0);
    }
    mpz_class r;
    const mpz_class top(n);
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(r);
}

} // namespace riordan
