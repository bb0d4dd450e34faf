#pragma once

#include <vector>

#include "boxcalc/piecewise.hpp"

namespace boxcalc {

enum class SequenceKind { f, g };

// Memoized sequence of either recursion, indexed from 1:
//   f_1 = box,  f_{n+1} = K f_n
//   g_1 = box,  g_{n+1} = L g_n + K g_n
// element(n) extends the cache as needed; previously built entries are
// never recomputed. Construction is sequential (each element depends on
// the previous); a fully built cache can be read concurrently.
class SequenceCache {
public:
    explicit SequenceCache(SequenceKind kind) : kind_(kind) {}

    SequenceKind kind() const { return kind_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const PiecewisePoly& element(int n);

private:
    SequenceKind kind_;
    std::vector<PiecewisePoly> elements_;  // elements_[i] holds element i + 1
};

// Process-wide cached builders (thread-safe; return copies so callers never
// hold references into a cache that another thread may be extending).
PiecewisePoly build_f(int n);
PiecewisePoly build_g(int n);

// g_n assembled from the f's alone: Σ_{k=0}^{n-1} C(n-1, k) L^k f_{n-k}.
PiecewisePoly build_g_via_f(int n);

// Box-kernel population profile after t generations with growth factor R:
// R^t · f_t, because convolving with the unit box once is one application
// of the window integral K.
PiecewisePoly population_profile(int t, const Rational& R);

}  // namespace boxcalc
