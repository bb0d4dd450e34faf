#pragma once

#include <stdexcept>
#include <string>

namespace boxcalc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown by eval() when asked for the interior value at a knot.
class KnotAmbiguousError : public Error {
public:
    explicit KnotAmbiguousError(const std::string& detail)
        : Error("knot-ambiguous: " + detail) {}
};

// Thrown by operations that need a zero tail (antiderivative, definite_integral).
class UnboundedSupportError : public Error {
public:
    explicit UnboundedSupportError(const std::string& detail)
        : Error("unbounded-support: " + detail) {}
};

// Thrown by the closed-form evaluators, which are defined only for n >= 2.
class NTooSmallError : public Error {
public:
    explicit NTooSmallError(const std::string& detail)
        : Error("n-too-small: " + detail) {}
};

// Thrown by export when the requested sample range is degenerate.
class EmptyRangeError : public Error {
public:
    explicit EmptyRangeError(const std::string& detail)
        : Error("empty-range: " + detail) {}
};

// Thrown when parsing rational strings or serialized piecewise polynomials.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& detail)
        : Error("parse-error: " + detail) {}
};

}  // namespace boxcalc
