#pragma once

#include <stdexcept>
#include <string>

namespace distgraph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Checked integer arithmetic exceeded 128 bits.
struct OverflowError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

/// gcd(|a|,|b|) != 1, so (a,b) generates no point of the projective line.
struct NonUnimodularError : Error {
    using Error::Error;
};

struct ZeroVectorError : Error {
    using Error::Error;
};

struct NotDistantError : Error {
    using Error::Error;
};

/// Pair is equal or distant; the requested computation needs a non-trivial pair.
struct TrivialPairError : Error {
    using Error::Error;
};

struct DegenerateArgumentsError : Error {
    using Error::Error;
};

/// Slope q/p < 2 after basis normalization.
struct BadSlopeError : Error {
    using Error::Error;
};

struct InvalidSplitError : Error {
    using Error::Error;
};

struct OutOfBoundError : Error {
    using Error::Error;
};

}  // namespace distgraph
