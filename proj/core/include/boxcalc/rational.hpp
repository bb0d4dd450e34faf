#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "boxcalc/errors.hpp"

namespace boxcalc {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. Always canonical: denominator > 0 and
// gcd(|numerator|, denominator) == 1 after every operation.
//
// Serializes as "p/q" with "/q" omitted when q == 1 ("-3/2", "1", "0");
// parse() accepts exactly that grammar: optional leading '-', an integer,
// then optionally '/' and a positive integer.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : value_(value) {}  // NOLINT: implicit by design
    Rational(Integer value) : value_(std::move(value)) {}
    Rational(Integer num, Integer den);

    Integer numerator() const { return boost::multiprecision::numerator(value_); }
    Integer denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    std::string to_string() const;
    static Rational parse(std::string_view text);

private:
    boost::multiprecision::cpp_rational value_;
};

Rational abs(const Rational& x);

// x^e by repeated squaring on exact rationals; pow(0, 0) == 1.
Rational pow(const Rational& base, unsigned exponent);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace boxcalc
