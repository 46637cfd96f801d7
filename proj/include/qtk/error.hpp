#pragma once

#include <stdexcept>
#include <string>

namespace qtk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violations on otherwise well-formed values.
struct DomainError : Error {
    using Error::Error;
};

// Text that does not parse as the requested value.
struct ParseError : Error {
    using Error::Error;
};

// A shape for which no vertex-operator route to H_mu[X;q,t] exists.
struct UnsupportedShape : Error {
    using Error::Error;
};

// A specialization point at which a required factor vanishes.
struct DegeneratePoint : Error {
    using Error::Error;
};

} // namespace qtk
