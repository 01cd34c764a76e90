#pragma once

#include <stdexcept>

namespace irmir {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two channels disagree in width, height, or level count.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A measure is undefined for a single-pixel input (log NM = 0).
struct DegenerateSize : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct InvalidDistance : Error {
    using Error::Error;
};

struct InvalidCoefficient : Error {
    using Error::Error;
};

/// Optimizer grid upper bound 255/mean is undefined for an all-zero channel.
struct ZeroMeanChannel : Error {
    using Error::Error;
};

struct EmptyGrid : Error {
    using Error::Error;
};

/// A two-symbol probability lies outside the open interval (1/NM, 1-1/NM).
struct InvalidProbability : Error {
    using Error::Error;
};

struct UnsupportedFormat : Error {
    using Error::Error;
};

struct CorruptFile : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct MissingField : Error {
    using Error::Error;
};

/// Command-line misuse; the CLI maps this to exit code 1 (data errors map to 2).
struct UsageError : Error {
    using Error::Error;
};

} // namespace irmir
