#pragma once

#include "boxcalc/rational.hpp"

namespace boxcalc {

// Direct finite-sum evaluators for f_n and g_n. They share no code with the
// piecewise builders — no knots, no piece algebra — which is what makes the
// cross-checks in the verification suite meaningful.
//
// All three use the a.e. pointwise convention at breakpoints: |0| terms
// vanish, 0^0 = 1, and the box is 0 at ±1/2. Callers that care when a box
// edge was touched can pass box_knot_hit.

// f_n(x) = (n/2) Σ_{i=0}^{n} (-1)^{n-i} / (i! (n-i)!) (x - n/2 + i)^{n-2} |x - n/2 + i|,
// valid for n >= 2 only (NTooSmallError below that).
Rational eval_f_closed(int n, const Rational& x);

// g_n(x) = Σ_{k=0}^{n-1} C(n-1, k) Σ_{r=0}^{k} (-1)^r C(k, r) f_{n-k}(x + k/2 - r),
// using eval_f_closed for n-k >= 2 and the box for the k = n-1 term; n >= 1.
Rational eval_g_combination(int n, const Rational& x, bool* box_knot_hit = nullptr);

// Sign of the (n-1)/2 offset inside the box arguments of eval_g_closed's
// tail sum. Only `positive` agrees with the recursion; `negative` is kept
// solely so the verification report can exhibit the disagreement (witness:
// n = 2, x = -1/4 gives 3/4 instead of 7/4).
enum class TailSign { positive, negative };

// The fully expanded form of g_n for n >= 2: a triple sum over the f
// expansion of every L^k f_{n-k} term with n-k >= 2, plus a box tail for
// the n-k = 1 term:
//
//   Σ_{k=0}^{n-2} Σ_{r=0}^{k} Σ_{t=0}^{n-k} C(n-1, k) (-1)^r C(k, r) ((n-k)/2)
//       (-1)^{n-k-t} / (t! (n-k-t)!) (x + k - r - n/2 + t)^{n-k-2} |x + k - r - n/2 + t|
//   + Σ_{r=0}^{n-1} (-1)^r C(n-1, r) box(x + (n-1)/2 - r)
//
// The (-1)^r alternation matches expand_L_power's coefficients; without it
// the sum stops agreeing with the recursion from n = 3 on (the unit tests
// pin this down).
Rational eval_g_closed(int n, const Rational& x, TailSign tail = TailSign::positive,
                       bool* box_knot_hit = nullptr);

}  // namespace boxcalc
