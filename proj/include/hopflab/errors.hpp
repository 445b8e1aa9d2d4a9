#pragma once

#include <stdexcept>
#include <string>

namespace hopflab {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An element's coordinates do not fit the group it was used with.
struct InvalidElement : Error {
    using Error::Error;
};

// group_from_relations got a relation lattice of infinite index.
struct InfiniteQuotient : Error {
    using Error::Error;
};

// An enumeration was requested beyond the configured size bound.
struct BoundExceeded : Error {
    using Error::Error;
};

// A constructive operation was called outside its stated hypothesis.
struct PreconditionViolated : Error {
    using Error::Error;
};

// Descriptor text rejected; `position` is a 0-based offset into the input.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// verify was asked for a suite name that does not exist.
struct UnknownSuite : Error {
    using Error::Error;
};

}  // namespace hopflab
