#pragma once

#include <stdexcept>
#include <string>

namespace chrom {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file or flag value.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// An operation's precondition does not hold for the given input
/// (degenerate tensor, disconnected graph, loop, bad b-vector, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// Independent random trials failed to agree on a count.
class InstabilityError : public Error {
public:
    explicit InstabilityError(const std::string& msg) : Error(msg) {}
};

/// A configured resource cap was exceeded (basis size, pair queue,
/// degree, or a size limit such as n_max / d_max).
class LimitError : public Error {
public:
    explicit LimitError(const std::string& msg) : Error(msg) {}
};

} // namespace chrom
