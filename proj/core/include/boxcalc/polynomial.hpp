#pragma once

#include <vector>

#include "boxcalc/rational.hpp"

namespace boxcalc {

// Dense univariate polynomial over Rational in the global monomial basis,
// coeffs()[i] multiplying x^i. Canonical: no trailing zero coefficients,
// the zero polynomial is the empty list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(Rational c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(const Polynomial& a);

    Polynomial scaled(const Rational& c) const;

    // p(x + h), recomposed in the global basis.
    Polynomial composed_shift(const Rational& h) const;
    // p(-x).
    Polynomial reflected() const;

    Polynomial derivative() const;
    Polynomial antiderivative() const;  // constant term 0

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

}  // namespace boxcalc
