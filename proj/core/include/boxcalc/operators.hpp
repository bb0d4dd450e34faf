#pragma once

#include <vector>

#include "boxcalc/piecewise.hpp"

namespace boxcalc {

// A finite integer combination of shifts, Σ coefficient · E^shift where
// E^h u(x) = u(x + h). Shifts are kept strictly decreasing and zero
// coefficients are never stored.
struct ShiftTerm {
    Integer coefficient;
    Rational shift;
};

struct ShiftCombination {
    std::vector<ShiftTerm> terms;
};

// L f = E^{1/2} f - E^{-1/2} f, the centered difference with step 1/2.
PiecewisePoly diff_L(const PiecewisePoly& f);

// K f (x) = integral of f over (x - 1/2, x + 1/2), realized as
// F(x + 1/2) - F(x - 1/2) with F the continuous antiderivative. Raises
// each piece degree by at most one and widens the support by 1/2 per side.
PiecewisePoly window_K(const PiecewisePoly& f);

// L^k expanded into shifts: terms ((-1)^r C(k, r), k/2 - r) for r = 0..k.
ShiftCombination expand_L_power(int k);

PiecewisePoly apply_shift_combination(const ShiftCombination& sc, const PiecewisePoly& f);

}  // namespace boxcalc
