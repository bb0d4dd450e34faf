#include "boxcalc/errors.hpp"
#include "boxcalc/json_io.hpp"
#include "boxcalc/sequences.hpp"
#include "doctest.h"

using boxcalc::build_f;
using boxcalc::build_g;
using boxcalc::equal_ae;
using boxcalc::make_box;
using boxcalc::ParseError;
using boxcalc::piecewise_from_json;
using boxcalc::piecewise_to_json;
using nlohmann::ordered_json;

TEST_CASE("the box serializes to the pinned wire format") {
    CHECK(piecewise_to_json(make_box()).dump() ==
          R"({"knots":["-1/2","1/2"],"pieces":[["0"],["1"],["0"]]})");
}

TEST_CASE("zero polynomials are written as [\"0\"], not []") {
    const ordered_json j = piecewise_to_json(boxcalc::PiecewisePoly());
    CHECK(j.dump() == R"({"knots":[],"pieces":[["0"]]})");
    CHECK(piecewise_from_json(j).is_zero());
}

TEST_CASE("multi-coefficient pieces serialize ascending") {
    const ordered_json j = piecewise_to_json(build_g(2));
    CHECK(j.dump() ==
          R"({"knots":["-1","0","1"],"pieces":[["0"],["2","1"],["0","-1"],["0"]]})");
}

TEST_CASE("round trips are a.e.-faithful for both sequences") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(equal_ae(piecewise_from_json(piecewise_to_json(build_f(n))), build_f(n)));
        CHECK(equal_ae(piecewise_from_json(piecewise_to_json(build_g(n))), build_g(n)));
    }
}

TEST_CASE("reading canonicalizes redundant input") {
    const auto j = ordered_json::parse(
        R"({"knots":["-1/2","0","1/2"],"pieces":[["0"],["1"],["1"],["0"]]})");
    CHECK(piecewise_from_json(j) == make_box());

    // trailing zero coefficients are also absorbed
    const auto padded = ordered_json::parse(
        R"({"knots":["-1/2","1/2"],"pieces":[["0"],["1","0","0"],["0","0"]]})");
    CHECK(piecewise_from_json(padded) == make_box());
}

TEST_CASE("malformed documents are rejected") {
    const auto bad = [](const char* text) {
        CHECK_THROWS_AS(piecewise_from_json(ordered_json::parse(text)), ParseError);
    };
    bad(R"({"pieces":[["0"]]})");                                  // no knots
    bad(R"({"knots":[]})");                                        // no pieces
    bad(R"({"knots":"x","pieces":[["0"]]})");                      // knots not an array
    bad(R"({"knots":[0.5],"pieces":[["0"],["1"]]})");              // knot not a string
    bad(R"({"knots":["1/2"],"pieces":[["0"],[]]})");               // empty piece
    bad(R"({"knots":["1/2"],"pieces":[["0"],[1]]})");              // coefficient not a string
    bad(R"({"knots":["1/2"],"pieces":[["0"],["x"]]})");            // bad rational
    bad(R"({"knots":["0.5"],"pieces":[["0"],["1"]]})");            // bad rational knot

    // structurally valid JSON with inconsistent shapes
    CHECK_THROWS_AS(piecewise_from_json(ordered_json::parse(
                        R"({"knots":["1/2"],"pieces":[["0"]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(piecewise_from_json(ordered_json::parse(
                        R"({"knots":["1/2","-1/2"],"pieces":[["0"],["1"],["0"]]})")),
                    std::invalid_argument);
}
