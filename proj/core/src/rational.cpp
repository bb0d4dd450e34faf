#include "boxcalc/rational.hpp"

#include <cctype>
#include <ostream>

namespace boxcalc {

Rational::Rational(Integer num, Integer den) {
    if (den.is_zero()) {
        throw std::domain_error("Rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    value_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::string Rational::to_string() const {
    std::string s = numerator().str();
    if (const Integer den = denominator(); den != 1) {
        s += "/";
        s += den.str();
    }
    return s;
}

Rational Rational::parse(std::string_view text) {
    const auto fail = [&] { throw ParseError("bad rational \"" + std::string(text) + "\""); };

    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && text[i] == '-') {
        negative = true;
        ++i;
    }
    const std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) fail();
    Integer num(std::string(text.substr(num_begin, i - num_begin)));

    Integer den = 1;
    if (i < text.size()) {
        if (text[i] != '/') fail();
        ++i;
        const std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != text.size()) fail();
        den = Integer(std::string(text.substr(den_begin)));
        if (den.is_zero()) fail();
    }
    if (negative) num = -num;
    return Rational(std::move(num), std::move(den));
}

Rational abs(const Rational& x) {
    return x.sign() < 0 ? -x : x;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result = 1;
    Rational square = base;
    for (unsigned e = exponent; e != 0; e >>= 1) {
        if (e & 1u) result *= square;
        if (e > 1) square *= square;
    }
    return result;
}

Integer floor(const Rational& x) {
    Integer q = x.numerator() / x.denominator();  // truncates toward zero
    if (x.sign() < 0 && q * x.denominator() != x.numerator()) --q;
    return q;
}

Integer ceil(const Rational& x) {
    return -floor(-x);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.to_string();
}

}  // namespace boxcalc
