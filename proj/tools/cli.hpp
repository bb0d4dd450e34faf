#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boxcalc/piecewise.hpp"
#include "boxcalc/rational.hpp"

namespace boxcalc::cli {

enum class ExportKind { f, g, population };

struct ExportRow {
    Rational x;
    Rational value;
};

// Sampled function table. Rows are strictly increasing in x and never land
// on a knot of the sampled function: grid points that would are nudged
// rightward by half the grid step (then quarter, eighth, ... if the nudge
// itself lands on one), all in exact arithmetic.
struct ExportTable {
    std::vector<ExportRow> rows;
    std::optional<int> decimal_digits;  // render hint; values stay exact here
};

// count equally spaced points across [lo, hi] (the midpoint for count == 1).
// R is required for (and only consulted by) the population kind; n_or_t is
// the sequence index for f/g and the generation count for population.
ExportTable export_samples(ExportKind kind, int n_or_t, int count, const Rational& lo,
                           const Rational& hi, const std::optional<Rational>& R,
                           std::optional<int> decimal_digits);

// Fixed-point decimal with the given fraction digits, rounding half to
// even, zero-padded, and never "-0.00...".
std::string format_decimal(const Rational& value, int digits);

// "x,value" header plus one row per sample; cells are rational strings, or
// fixed-point decimals when the table carries decimal_digits.
std::string render_csv(const ExportTable& table);

// {"kind": ..., "n"|"t": ..., ["R": ...,] "rows": [{"x", "value"}...]}
std::string render_json(const ExportTable& table, ExportKind kind, int n_or_t,
                        const std::optional<Rational>& R);

// Full command dispatch (args exclude the program name). Exit status:
// 0 success, 1 verification found a failing check, 2 usage error.
int run(const std::vector<std::string>& args);

}  // namespace boxcalc::cli
