#ifndef UCPOLY_ERRORS_HPP
#define UCPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ucpoly {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// an input exceeds a documented exact-computation bound, or a node budget ran out
struct SizeLimitError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct NotPerfectError : Error {
    using Error::Error;
};

struct NotCisError : Error {
    using Error::Error;
};

struct InvalidPosetError : Error {
    using Error::Error;
};

struct OriginNotInteriorError : Error {
    using Error::Error;
};

struct UnboundedError : Error {
    using Error::Error;
};

// input to a hull computation is not full-dimensional
struct DegenerateError : Error {
    using Error::Error;
};

struct DegenerateSimplexError : Error {
    using Error::Error;
};

// the binomial system for an h*-vector has no consistent nonnegative solution,
// which signals an upstream counting bug
struct NonIntegralSolutionError : Error {
    using Error::Error;
};

} // namespace ucpoly

#endif
