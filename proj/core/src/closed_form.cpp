#include "boxcalc/closed_form.hpp"

#include <stdexcept>

#include "boxcalc/binomial.hpp"
#include "boxcalc/errors.hpp"

namespace boxcalc {

namespace {

// Pointwise box: 1 strictly inside (-1/2, 1/2), 0 outside AND at the two
// edges (the a.e. convention picks 0 there). knot_hit flags an edge touch.
Rational box_pointwise(const Rational& y, bool* knot_hit) {
    const Rational half(1, 2);
    const Rational a = abs(y);
    if (a < half) return Rational(1);
    if (a == half && knot_hit != nullptr) *knot_hit = true;
    return Rational(0);
}

}  // namespace

Rational eval_f_closed(int n, const Rational& x) {
    if (n < 2) throw NTooSmallError("f closed form needs n >= 2, got n = " + std::to_string(n));
    const Rational n_half(n, 2);
    Rational sum;
    for (int i = 0; i <= n; ++i) {
        const Rational base = x - n_half + i;
        Rational term = pow(base, static_cast<unsigned>(n - 2)) * abs(base);
        if ((n - i) % 2 != 0) term = -term;
        term /= Rational(factorial(i) * factorial(n - i));
        sum += term;
    }
    return sum * n_half;
}

Rational eval_g_combination(int n, const Rational& x, bool* box_knot_hit) {
    if (n < 1) throw std::invalid_argument("g combination needs n >= 1");
    Rational sum;
    for (int k = 0; k <= n - 1; ++k) {
        const Integer outer = binomial(n - 1, k);
        for (int r = 0; r <= k; ++r) {
            Integer c = outer * binomial(k, r);
            if (r % 2 != 0) c = -c;
            const Rational y = x + Rational(k, 2) - r;
            const Rational value =
                n - k >= 2 ? eval_f_closed(n - k, y) : box_pointwise(y, box_knot_hit);
            sum += Rational(c) * value;
        }
    }
    return sum;
}

Rational eval_g_closed(int n, const Rational& x, TailSign tail, bool* box_knot_hit) {
    if (n < 2) throw NTooSmallError("g closed form needs n >= 2, got n = " + std::to_string(n));
    const Rational n_half(n, 2);
    Rational sum;
    for (int k = 0; k <= n - 2; ++k) {
        const Integer outer = binomial(n - 1, k);
        const Rational width_half(n - k, 2);
        for (int r = 0; r <= k; ++r) {
            Integer c = outer * binomial(k, r);
            if (r % 2 != 0) c = -c;
            for (int t = 0; t <= n - k; ++t) {
                const Rational base = x + k - r - n_half + t;
                Rational term = pow(base, static_cast<unsigned>(n - k - 2)) * abs(base);
                term *= Rational(c);
                if ((n - k - t) % 2 != 0) term = -term;
                term /= Rational(factorial(t) * factorial(n - k - t));
                sum += width_half * term;
            }
        }
    }
    const Rational offset(n - 1, 2);
    for (int r = 0; r <= n - 1; ++r) {
        Integer c = binomial(n - 1, r);
        if (r % 2 != 0) c = -c;
        const Rational y = tail == TailSign::positive ? x + offset - r : x - offset - r;
        sum += Rational(c) * box_pointwise(y, box_knot_hit);
    }
    return sum;
}

}  // namespace boxcalc
