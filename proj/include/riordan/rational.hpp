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

#ifndef RIORDAN_RATIONAL_HPP
#define RIORDAN_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace riordan
{

// Exact rational number backed by GMP. Always in lowest terms with a
// positive denominator; division by zero throws instead of trapping.
class Rational
{
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(unsigned long v) : v_(v) {}
    Rational(const mpz_class &v) : v_(v) {}
    Rational(const mpz_class &num, const mpz_class &den);
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    // Accepts "num" or "num/den" with an optional leading sign.
    static Rational parse(std::string_view text);

    mpz_class numerator() const
    {
        return v_.get_num();
    }
    mpz_class denominator() const
    {
        return v_.get_den();
    }

    bool is_zero() const noexcept
    {
        return sgn(v_) == 0;
    }
    bool is_integer() const noexcept
    {
        return v_.get_den() == 1;
    }
    int sign() const noexcept
    {
        return sgn(v_);
    }

    // "num" or "num/den"; inverse of parse().
    std::string str() const;

    Rational &operator+=(const Rational &o)
    {
        v_ += o.v_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        v_ -= o.v_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        v_ *= o.v_;
        return *this;
    }
    Rational &operator/=(const Rational &o);

    // this += x * y without materialising the product as a Rational.
    Rational &add_product(const Rational &x, const Rational &y)
    {
        v_ += x.v_ * y.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }
    Rational operator-() const
    {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    // Integer power; negative exponents invert (and throw on zero).
    Rational pow(long e) const;

    const mpq_class &raw() const noexcept
    {
        return v_;
    }

private:
    mpq_class v_;
};

std::ostream &operator<<(std::ostream &os, const Rational &q);

// n! as an exact integer rational.
Rational factorial(long n);

// Integer binomial with the usual conventions: zero when k < 0 or k > n >= 0.
Rational binomial(long n, long k);

} // namespace riordan

#endif
