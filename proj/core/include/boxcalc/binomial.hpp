#pragma once

#include <vector>

#include "boxcalc/rational.hpp"

namespace boxcalc {

// n! as an exact integer.
Integer factorial(int n);

// C(n, k) by the multiply/divide loop; returns 0 when k > n.
Integer binomial(int n, int k);

// Pascal-triangle coefficient table, rows n = 1..n_max with entries
// k = 0..n-1, filled purely by the additive recurrence
//   c(n+1, 0) = c(n+1, n) = 1,  c(n+1, k) = c(n, k) + c(n, k-1).
// No factorials are used; entry(n, k) == binomial(n-1, k) is an invariant
// checked by the verification suite, not assumed here.
class CoeffTable {
public:
    explicit CoeffTable(int n_max);

    int n_max() const { return static_cast<int>(rows_.size()); }
    const Integer& entry(int n, int k) const;

private:
    std::vector<std::vector<Integer>> rows_;
};

inline CoeffTable coeff_table(int n_max) { return CoeffTable(n_max); }

}  // namespace boxcalc
