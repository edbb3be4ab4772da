#pragma once

#include <stdexcept>
#include <string>

namespace magraph {

/// Base class for all library errors. CLI maps any Error to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Vector/matrix dimension mismatch (empty vector, unequal lengths, ...).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Out-of-range or otherwise invalid parameter value (p < 1, sigma <= 0, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Structurally valid input whose content violates a data invariant
/// (duplicate id, negative weight, self-loop edge, degenerate input, ...).
class DataError : public Error {
public:
    using Error::Error;
};

/// Malformed file content; message carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Reference to a vertex id that does not exist in the graph.
class ReferentialError : public Error {
public:
    using Error::Error;
};

}  // namespace magraph
