#include "boxcalc/json_io.hpp"

#include "boxcalc/errors.hpp"

namespace boxcalc {

using nlohmann::ordered_json;

ordered_json piecewise_to_json(const PiecewisePoly& f) {
    ordered_json j;
    j["knots"] = ordered_json::array();
    for (const Rational& k : f.knots()) j["knots"].push_back(k.to_string());
    j["pieces"] = ordered_json::array();
    for (const Polynomial& p : f.pieces()) {
        ordered_json coeffs = ordered_json::array();
        if (p.is_zero()) {
            coeffs.push_back("0");
        } else {
            for (const Rational& c : p.coeffs()) coeffs.push_back(c.to_string());
        }
        j["pieces"].push_back(std::move(coeffs));
    }
    return j;
}

PiecewisePoly piecewise_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("knots") || !j.contains("pieces"))
        throw ParseError("piecewise JSON needs \"knots\" and \"pieces\" fields");
    const auto& jk = j.at("knots");
    const auto& jp = j.at("pieces");
    if (!jk.is_array() || !jp.is_array())
        throw ParseError("piecewise JSON fields must be arrays");

    std::vector<Rational> knots;
    knots.reserve(jk.size());
    for (const auto& k : jk) {
        if (!k.is_string()) throw ParseError("knots must be rational strings");
        knots.push_back(Rational::parse(k.get<std::string>()));
    }

    std::vector<Polynomial> pieces;
    pieces.reserve(jp.size());
    for (const auto& piece : jp) {
        if (!piece.is_array() || piece.empty())
            throw ParseError("each piece must be a non-empty coefficient array");
        std::vector<Rational> coeffs;
        coeffs.reserve(piece.size());
        for (const auto& c : piece) {
            if (!c.is_string()) throw ParseError("coefficients must be rational strings");
            coeffs.push_back(Rational::parse(c.get<std::string>()));
        }
        pieces.emplace_back(std::move(coeffs));
    }
    return PiecewisePoly::from_parts(std::move(knots), std::move(pieces));
}

}  // namespace boxcalc
