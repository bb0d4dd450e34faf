#include "boxcalc/binomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxcalc {

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

Integer binomial(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > n) return 0;
    k = std::min(k, n - k);
    Integer result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result is C(n-k+i, i) at every step
    }
    return result;
}

CoeffTable::CoeffTable(int n_max) {
    if (n_max < 1) throw std::invalid_argument("CoeffTable: n_max must be >= 1");
    rows_.reserve(static_cast<std::size_t>(n_max));
    rows_.push_back({Integer(1)});
    for (int n = 1; n < n_max; ++n) {
        const auto& prev = rows_.back();
        std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
        row.front() = 1;
        row.back() = 1;
        for (int k = 1; k < n; ++k) {
            row[static_cast<std::size_t>(k)] = prev[static_cast<std::size_t>(k)] +
                                               prev[static_cast<std::size_t>(k) - 1];
        }
        rows_.push_back(std::move(row));
    }
}

const Integer& CoeffTable::entry(int n, int k) const {
    if (n < 1 || n > n_max() || k < 0 || k >= n) {
        throw std::out_of_range("CoeffTable::entry: index out of range");
    }
    return rows_[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k)];
}

}  // namespace boxcalc
