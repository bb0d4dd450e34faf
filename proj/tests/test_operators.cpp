#include <random>

#include "boxcalc/operators.hpp"
#include "boxcalc/verify.hpp"
#include "doctest.h"

using boxcalc::apply_shift_combination;
using boxcalc::diff_L;
using boxcalc::equal_ae;
using boxcalc::expand_L_power;
using boxcalc::make_box;
using boxcalc::PiecewisePoly;
using boxcalc::Rational;
using boxcalc::ShiftCombination;
using boxcalc::Side;
using boxcalc::UnboundedSupportError;
using boxcalc::window_K;

TEST_CASE("diff_L = shift by +1/2 minus shift by -1/2") {
    const PiecewisePoly box = make_box();
    const PiecewisePoly L_box = diff_L(box);
    CHECK(L_box.eval(Rational(-1, 4), Side::interior) == Rational(1));
    CHECK(L_box.eval(Rational(1, 4), Side::interior) == Rational(-1));
    CHECK(L_box.eval(Rational(2), Side::interior) == Rational(0));
    CHECK(diff_L(PiecewisePoly()).is_zero());
    CHECK(equal_ae(L_box, boxcalc::linear_combine({{Rational(1), shift(box, Rational(1, 2))},
                                                   {Rational(-1), shift(box, Rational(-1, 2))}})));
    // L annihilates the mean
    CHECK(boxcalc::definite_integral(L_box) == Rational(0));
}

TEST_CASE("window_K integrates over a centered unit window") {
    const PiecewisePoly box = make_box();
    const PiecewisePoly K_box = window_K(box);
    CHECK(K_box.eval(Rational(0), Side::interior) == Rational(1));
    CHECK(K_box.eval(Rational(1, 2), Side::left) == Rational(1, 2));
    CHECK(K_box.eval(Rational(1, 2), Side::right) == Rational(1, 2));
    CHECK(K_box.eval(Rational(2), Side::interior) == Rational(0));
    CHECK(K_box.max_degree() == box.max_degree() + 1);
    CHECK(K_box.knots().front() == Rational(-1));  // support widened by 1/2 each side
    CHECK(K_box.knots().back() == Rational(1));

    CHECK_THROWS_AS(window_K(boxcalc::antiderivative(box)), UnboundedSupportError);
}

TEST_CASE("expand_L_power produces signed binomial shift combinations") {
    const ShiftCombination identity = expand_L_power(0);
    REQUIRE(identity.terms.size() == 1);
    CHECK(identity.terms[0].coefficient == 1);
    CHECK(identity.terms[0].shift == Rational(0));

    const ShiftCombination L1 = expand_L_power(1);
    REQUIRE(L1.terms.size() == 2);
    CHECK(L1.terms[0].coefficient == 1);
    CHECK(L1.terms[0].shift == Rational(1, 2));
    CHECK(L1.terms[1].coefficient == -1);
    CHECK(L1.terms[1].shift == Rational(-1, 2));

    const ShiftCombination L2 = expand_L_power(2);
    REQUIRE(L2.terms.size() == 3);
    CHECK(L2.terms[0].coefficient == 1);
    CHECK(L2.terms[0].shift == Rational(1));
    CHECK(L2.terms[1].coefficient == -2);
    CHECK(L2.terms[1].shift == Rational(0));
    CHECK(L2.terms[2].coefficient == 1);
    CHECK(L2.terms[2].shift == Rational(-1));

    // shifts strictly decreasing, coefficients alternating binomials
    const ShiftCombination L7 = expand_L_power(7);
    for (std::size_t i = 1; i < L7.terms.size(); ++i)
        CHECK(L7.terms[i].shift < L7.terms[i - 1].shift);

    CHECK_THROWS_AS(expand_L_power(-1), std::invalid_argument);
}

TEST_CASE("applying a combination matches iterated differences") {
    const PiecewisePoly box = make_box();
    CHECK(equal_ae(apply_shift_combination(expand_L_power(0), box), box));
    CHECK(equal_ae(apply_shift_combination(expand_L_power(1), box), diff_L(box)));
    CHECK(equal_ae(apply_shift_combination(expand_L_power(3), box),
                   diff_L(diff_L(diff_L(box)))));

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 5; ++trial) {
        const PiecewisePoly u = boxcalc::random_test_function(rng(), 5, 3);
        PiecewisePoly iterated = u;
        for (int k = 0; k <= 8; ++k) {
            CHECK(equal_ae(apply_shift_combination(expand_L_power(k), u), iterated));
            iterated = diff_L(iterated);
        }
    }
}

TEST_CASE("L and K commute and satisfy the derivative identity") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const PiecewisePoly u = boxcalc::random_test_function(rng(), 6, 4);
        CHECK(equal_ae(diff_L(window_K(u)), window_K(diff_L(u))));
        CHECK(equal_ae(boxcalc::derivative(window_K(u)), diff_L(u)));
        CHECK(boxcalc::definite_integral(diff_L(u)) == Rational(0));
        CHECK(boxcalc::definite_integral(window_K(u)) == boxcalc::definite_integral(u));
    }
}
