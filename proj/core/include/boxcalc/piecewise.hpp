#pragma once

#include <utility>
#include <vector>

#include "boxcalc/polynomial.hpp"

namespace boxcalc {

enum class Side { left, right, interior };

// Piecewise polynomial over the whole real line: m strictly increasing knots
// and m+1 pieces, pieces()[0] on (-inf, knots()[0]), pieces()[i] on
// (knots()[i-1], knots()[i]), pieces()[m] on (knots()[m-1], +inf).
//
// Values at the knots themselves are not part of the data; identity is
// almost-everywhere and eval() at a jump knot needs an explicit side.
// Instances are always canonical (no knot separates two identical adjacent
// polynomials), which makes canonical-form comparison the same thing as
// a.e. equality.
class PiecewisePoly {
public:
    PiecewisePoly() : pieces_(1) {}  // the zero function

    // Validates sizes and strict knot monotonicity, then canonicalizes.
    static PiecewisePoly from_parts(std::vector<Rational> knots,
                                    std::vector<Polynomial> pieces);

    const std::vector<Rational>& knots() const { return knots_; }
    const std::vector<Polynomial>& pieces() const { return pieces_; }

    bool is_zero() const { return knots_.empty() && pieces_.front().is_zero(); }
    bool has_compact_support() const {
        return pieces_.front().is_zero() && pieces_.back().is_zero();
    }
    int max_degree() const;
    bool is_knot(const Rational& x) const;

    // Value of the piece containing x. At a knot, side selects the left or
    // right piece; Side::interior is accepted at a knot only when both
    // one-sided values agree (continuity), otherwise KnotAmbiguousError.
    Rational eval(const Rational& x, Side side) const;

    friend bool operator==(const PiecewisePoly&, const PiecewisePoly&) = default;

private:
    struct AlreadyCanonical {};
    PiecewisePoly(AlreadyCanonical, std::vector<Rational> knots,
                  std::vector<Polynomial> pieces)
        : knots_(std::move(knots)), pieces_(std::move(pieces)) {}

    std::vector<Rational> knots_;
    std::vector<Polynomial> pieces_;

    friend PiecewisePoly shift(const PiecewisePoly&, const Rational&);
    friend PiecewisePoly reflect(const PiecewisePoly&);
};

// The unit box: 1 on (-1/2, 1/2), 0 elsewhere.
PiecewisePoly make_box();

// f(x + h): knots move by -h, pieces are recomposed in the global basis.
PiecewisePoly shift(const PiecewisePoly& f, const Rational& h);

// sum of c_i * f_i over the merged knot set.
PiecewisePoly linear_combine(const std::vector<std::pair<Rational, PiecewisePoly>>& terms);

// F with F' = f piecewise, F continuous across knots and identically 0 left
// of the support. Requires a zero left tail (UnboundedSupportError otherwise).
PiecewisePoly antiderivative(const PiecewisePoly& f);

// Piecewise formal derivative; jump discontinuities contribute nothing.
PiecewisePoly derivative(const PiecewisePoly& f);

// Exact integral over the line; requires compact support.
Rational definite_integral(const PiecewisePoly& f);

bool equal_ae(const PiecewisePoly& a, const PiecewisePoly& b);

// f(-x). Helper for the symmetry checks; not an operator of the calculus.
PiecewisePoly reflect(const PiecewisePoly& f);

}  // namespace boxcalc
