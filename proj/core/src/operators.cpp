#include "boxcalc/operators.hpp"

#include <stdexcept>

#include "boxcalc/binomial.hpp"
#include "boxcalc/errors.hpp"

namespace boxcalc {

PiecewisePoly diff_L(const PiecewisePoly& f) {
    const Rational half(1, 2);
    return linear_combine({{Rational(1), shift(f, half)}, {Rational(-1), shift(f, -half)}});
}

PiecewisePoly window_K(const PiecewisePoly& f) {
    if (!f.has_compact_support())
        throw UnboundedSupportError("window integral needs compact support");
    return diff_L(antiderivative(f));
}

ShiftCombination expand_L_power(int k) {
    if (k < 0) throw std::invalid_argument("expand_L_power: k must be non-negative");
    ShiftCombination sc;
    sc.terms.reserve(static_cast<std::size_t>(k) + 1);
    for (int r = 0; r <= k; ++r) {
        Integer c = binomial(k, r);
        if (r % 2 != 0) c = -c;
        sc.terms.push_back({std::move(c), Rational(k, 2) - r});
    }
    return sc;
}

PiecewisePoly apply_shift_combination(const ShiftCombination& sc, const PiecewisePoly& f) {
    std::vector<std::pair<Rational, PiecewisePoly>> terms;
    terms.reserve(sc.terms.size());
    for (const ShiftTerm& t : sc.terms)
        terms.emplace_back(Rational(t.coefficient), shift(f, t.shift));
    return linear_combine(terms);
}

}  // namespace boxcalc
