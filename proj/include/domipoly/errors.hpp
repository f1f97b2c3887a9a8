#pragma once

#include <stdexcept>
#include <string>

namespace domipoly {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertex index out of range for the graph it was used with.
struct InvalidVertexError : Error {
    using Error::Error;
};

// A construction would exceed the 63-vertex carrier (or the root finder's
// degree cap), or an enumeration exceeds the configured size limit.
struct CapacityError : Error {
    using Error::Error;
};

// A family spec violates its parameter domain (e.g. kcycle with n < k+2).
struct SpecDomainError : Error {
    using Error::Error;
};

// A k-tree attachment script names vertices that do not form a k-clique.
struct InvalidScriptError : Error {
    using Error::Error;
};

// min_degree / degree asked of the zero polynomial.
struct UndefinedDegreeError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace domipoly
