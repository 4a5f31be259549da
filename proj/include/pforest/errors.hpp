#pragma once

#include <stdexcept>
#include <string>

namespace pforest {

// Base class for everything the library throws on bad input.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// edge_vector() called with i == j or an endpoint outside 1..n.
struct InvalidEdgeError : Error {
    using Error::Error;
};

// BitVectors of different lengths were combined.
struct DimensionMismatchError : Error {
    using Error::Error;
};

// Graph construction rejected a self-loop, duplicate edge, or out-of-range
// endpoint. The message names the offending pair.
struct GraphValidationError : Error {
    using Error::Error;
};

// A connected component of odd order where an even one is required.
struct OddComponentError : Error {
    OddComponentError(const std::string& what, int smallest)
        : Error(what), smallest_vertex(smallest) {}
    int smallest_vertex;
};

// Malformed input document; line and column are 1-based.
struct ParseError : Error {
    ParseError(const std::string& what, int line, int column)
        : Error(what), line(line), column(column) {}
    int line;
    int column;
};

// Oracle enumeration refused to run: edge count above the cap.
struct TooLargeError : Error {
    using Error::Error;
};

// Any other violated precondition (bad probability, mismatched vertex sets, ...).
struct InputError : Error {
    using Error::Error;
};

}  // namespace pforest
