#include "boxcalc/piecewise.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "boxcalc/errors.hpp"

namespace boxcalc {

namespace {

// Drops every knot whose two neighbouring pieces are the same polynomial.
void canonicalize(std::vector<Rational>& knots, std::vector<Polynomial>& pieces) {
    std::vector<Rational> ks;
    std::vector<Polynomial> ps;
    ks.reserve(knots.size());
    ps.reserve(pieces.size());
    ps.push_back(std::move(pieces.front()));
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (pieces[i + 1] == ps.back()) continue;
        ks.push_back(std::move(knots[i]));
        ps.push_back(std::move(pieces[i + 1]));
    }
    knots = std::move(ks);
    pieces = std::move(ps);
}

}  // namespace

PiecewisePoly PiecewisePoly::from_parts(std::vector<Rational> knots,
                                        std::vector<Polynomial> pieces) {
    if (pieces.size() != knots.size() + 1)
        throw std::invalid_argument("piecewise: need exactly one more piece than knots");
    for (std::size_t i = 1; i < knots.size(); ++i)
        if (!(knots[i - 1] < knots[i]))
            throw std::invalid_argument("piecewise: knots must be strictly increasing");
    canonicalize(knots, pieces);
    return PiecewisePoly(AlreadyCanonical{}, std::move(knots), std::move(pieces));
}

int PiecewisePoly::max_degree() const {
    int d = -1;
    for (const Polynomial& p : pieces_) d = std::max(d, p.degree());
    return d;
}

bool PiecewisePoly::is_knot(const Rational& x) const {
    return std::binary_search(knots_.begin(), knots_.end(), x);
}

Rational PiecewisePoly::eval(const Rational& x, Side side) const {
    const auto it = std::lower_bound(knots_.begin(), knots_.end(), x);
    const auto idx = static_cast<std::size_t>(it - knots_.begin());
    if (it == knots_.end() || *it != x)  // off knots every side agrees
        return pieces_[idx](x);
    switch (side) {
        case Side::left:
            return pieces_[idx](x);
        case Side::right:
            return pieces_[idx + 1](x);
        case Side::interior: {
            // The knot might be a leftover of construction rather than a
            // genuine jump of the canonical form only when both adjacent
            // polynomials happen to meet at x; then the value is unambiguous.
            Rational left = pieces_[idx](x);
            Rational right = pieces_[idx + 1](x);
            if (left == right) return left;
            throw KnotAmbiguousError("interior value requested at knot x = " + x.to_string() +
                                     " where the one-sided values are " + left.to_string() +
                                     " and " + right.to_string());
        }
    }
    throw std::logic_error("piecewise: unreachable");
}

PiecewisePoly make_box() {
    return PiecewisePoly::from_parts({Rational(-1, 2), Rational(1, 2)},
                                     {Polynomial(), Polynomial::constant(1), Polynomial()});
}

PiecewisePoly shift(const PiecewisePoly& f, const Rational& h) {
    // Composition with x + h is a bijection on polynomials, so adjacent
    // pieces stay distinct and the result is canonical as built.
    std::vector<Rational> knots;
    knots.reserve(f.knots_.size());
    for (const Rational& k : f.knots_) knots.push_back(k - h);
    std::vector<Polynomial> pieces;
    pieces.reserve(f.pieces_.size());
    for (const Polynomial& p : f.pieces_) pieces.push_back(p.composed_shift(h));
    return PiecewisePoly(PiecewisePoly::AlreadyCanonical{}, std::move(knots), std::move(pieces));
}

PiecewisePoly reflect(const PiecewisePoly& f) {
    std::vector<Rational> knots(f.knots_.rbegin(), f.knots_.rend());
    for (Rational& k : knots) k = -k;
    std::vector<Polynomial> pieces(f.pieces_.rbegin(), f.pieces_.rend());
    for (Polynomial& p : pieces) p = p.reflected();
    return PiecewisePoly(PiecewisePoly::AlreadyCanonical{}, std::move(knots), std::move(pieces));
}

PiecewisePoly linear_combine(const std::vector<std::pair<Rational, PiecewisePoly>>& terms) {
    std::set<Rational> merged;
    for (const auto& [c, f] : terms)
        merged.insert(f.knots().begin(), f.knots().end());
    const std::vector<Rational> knots(merged.begin(), merged.end());

    // On each interval of the merged grid, every term is a single
    // polynomial: the one owning the piece just right of the interval's
    // left endpoint (piece 0 for the leftmost, unbounded interval).
    std::vector<Polynomial> pieces(knots.size() + 1);
    for (const auto& [c, f] : terms) {
        const auto& fk = f.knots();
        const auto& fp = f.pieces();
        for (std::size_t j = 0; j < pieces.size(); ++j) {
            std::size_t idx = 0;
            if (j > 0)
                idx = static_cast<std::size_t>(
                    std::upper_bound(fk.begin(), fk.end(), knots[j - 1]) - fk.begin());
            pieces[j] += fp[idx].scaled(c);
        }
    }
    return PiecewisePoly::from_parts(knots, std::move(pieces));
}

PiecewisePoly antiderivative(const PiecewisePoly& f) {
    if (!f.pieces().front().is_zero())
        throw UnboundedSupportError("antiderivative needs a zero left tail");
    const auto& knots = f.knots();
    std::vector<Polynomial> pieces;
    pieces.reserve(f.pieces().size());
    pieces.emplace_back();  // identically 0 left of the support
    for (std::size_t i = 1; i < f.pieces().size(); ++i) {
        Polynomial F = f.pieces()[i].antiderivative();
        // Pin the constant so the result is continuous at the left knot.
        const Rational& a = knots[i - 1];
        Rational c = pieces.back()(a) - F(a);
        if (!c.is_zero()) F += Polynomial::constant(c);
        pieces.push_back(std::move(F));
    }
    return PiecewisePoly::from_parts(knots, std::move(pieces));
}

PiecewisePoly derivative(const PiecewisePoly& f) {
    std::vector<Polynomial> pieces;
    pieces.reserve(f.pieces().size());
    for (const Polynomial& p : f.pieces()) pieces.push_back(p.derivative());
    return PiecewisePoly::from_parts(f.knots(), std::move(pieces));
}

Rational definite_integral(const PiecewisePoly& f) {
    if (!f.has_compact_support())
        throw UnboundedSupportError("definite integral needs compact support");
    Rational total;
    const auto& knots = f.knots();
    for (std::size_t i = 1; i + 1 < f.pieces().size(); ++i) {
        Polynomial F = f.pieces()[i].antiderivative();
        total += F(knots[i]) - F(knots[i - 1]);
    }
    return total;
}

bool equal_ae(const PiecewisePoly& a, const PiecewisePoly& b) {
    // Canonical form is unique per a.e. class, so this is not a shortcut:
    // it is the refinement comparison collapsed.
    return a == b;
}

}  // namespace boxcalc
