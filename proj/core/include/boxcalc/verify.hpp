#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "boxcalc/piecewise.hpp"

namespace boxcalc {

struct CheckResult {
    std::string name;
    std::string parameters;
    bool passed = false;
    // Failures always carry a witness (the offending n, x, and both values);
    // passing checks usually omit it, except sign-variant-witness, whose
    // whole point is the recorded counterexample.
    std::optional<std::string> witness;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::uint64_t seed = 0;
    int n_max = 0;
    int samples_per_n = 0;

    bool all_passed() const;
};

// Runs the full battery in a fixed order:
//   coefficient-table-vs-binomial, commutativity, derivative-identity,
//   f-closed-form-equivalence, g-combination-equivalence,
//   g-closed-form-equivalence, conservation, structure-invariants,
//   f-symmetry, sign-variant-witness.
// Deterministic: the same (n_max, samples_per_n, seed) yields a
// byte-identical serialized report. Failures populate report entries;
// nothing is thrown.
VerificationReport run_all(int n_max, int samples_per_n, std::uint64_t seed);

// Deterministic compactly supported test function: 2..max_knots knots drawn
// either from the half-integer lattice or from a general small-denominator
// pool (per-seed choice), zero outer tails, interior pieces with small
// integer coefficients of degree <= max_degree.
PiecewisePoly random_test_function(std::uint64_t seed, int max_knots, int max_degree);

// {"checks": [{"name", "parameters", "status", "witness"?}...],
//  "seed": ..., "n_max": ..., "samples_per_n": ...} with status "pass"/"fail".
nlohmann::ordered_json report_to_json(const VerificationReport& report);

}  // namespace boxcalc
