#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgecut {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller supplied an out-of-range or inconsistent parameter.
class ParameterError : public Error {
public:
    using Error::Error;
};

class EmptyGraph : public Error {
public:
    EmptyGraph() : Error("graph has no edges") {}
};

class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t expected, std::size_t actual)
        : Error("assignment length " + std::to_string(actual) + " does not match edge count " +
                std::to_string(expected)) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class SpreadTooLarge : public ParameterError {
public:
    SpreadTooLarge(std::size_t spread, std::size_t parts)
        : ParameterError("spread " + std::to_string(spread) + " exceeds number of partitions " +
                         std::to_string(parts)) {}
};

class DomainError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

class AlphaOne : public DomainError {
public:
    AlphaOne() : DomainError("integral bracket is undefined for alpha = 1") {}
};

class InvalidStats : public Error {
public:
    using Error::Error;
};

/// An identity that must hold by construction was violated. Always a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace edgecut
