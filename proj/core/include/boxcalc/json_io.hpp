#pragma once

#include <nlohmann/json.hpp>

#include "boxcalc/piecewise.hpp"

namespace boxcalc {

// Wire format (field order matters, hence ordered_json):
//   {"knots": ["-1/2", "1/2"], "pieces": [["0"], ["1"], ["0"]]}
// Pieces are ascending coefficient lists of rational strings; the zero
// polynomial is written ["0"] rather than [].
nlohmann::ordered_json piecewise_to_json(const PiecewisePoly& f);

// Inverse of piecewise_to_json; validates shape, rational syntax, and knot
// order (ParseError / std::invalid_argument on violations), then
// canonicalizes, so a round trip is a.e.-faithful.
PiecewisePoly piecewise_from_json(const nlohmann::ordered_json& j);

}  // namespace boxcalc
