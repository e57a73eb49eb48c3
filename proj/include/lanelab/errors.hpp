// errors.hpp -- exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace lanelab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parameter tuple outside its admissible range.
struct ValidationError : Error {
    using Error::Error;
};

// Root bracket endpoints do not have the required signs.
struct BracketError : Error {
    using Error::Error;
};

// Sign scan found no crossing inside the bracket.
struct NoRootError : Error {
    using Error::Error;
};

// Radius outside the grid, or not resolvable to a grid node.
struct RangeError : Error {
    using Error::Error;
};

// Requested radius too close to the grid ends for the difference stencil.
struct StencilError : Error {
    using Error::Error;
};

// Test function support reaches the grid boundary.
struct SupportError : Error {
    using Error::Error;
};

// Singular-solution coefficient not positive for these parameters.
struct GammaNonpositive : Error {
    using Error::Error;
};

// Operation preconditions on the parameters violated (e.g. shooting with alpha <= -2).
struct ParameterError : Error {
    using Error::Error;
};

// Malformed input file; message carries the 1-based line number.
struct ParseError : Error {
    ParseError(std::size_t line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
    std::size_t line;
};

// Polynomial degree above the supported bound.
struct DegreeOverflow : Error {
    using Error::Error;
};

}  // namespace lanelab
