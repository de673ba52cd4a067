// error.hpp
// Error taxonomy shared by all tangnet modules. The CLI maps every
// tangnet::Error to exit code 1 (domain error); usage errors are exit 2.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tangnet {

// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument values (bad party sets, wrong model kind, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Shape or dimension mismatches.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Result would exceed the configured total-dimension cap.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

// A declared contract does not hold (non-Hermitian input to the Hermitian
// eigensolver, broken type invariant, ...).
class ContractError : public Error {
public:
    using Error::Error;
};

// Ensemble members or operands live on incompatible spaces.
class SpaceError : public Error {
public:
    using Error::Error;
};

// A density operator has an eigenvalue below the admissible floor.
class InvalidDensityError : public Error {
public:
    using Error::Error;
};

// A quantum-structure invariant is violated.
class StructureError : public Error {
public:
    using Error::Error;
};

// DSL diagnostic with source position and the token set that would have
// been accepted at that point.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column,
               std::vector<std::string> expected)
        : Error(message + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line_(line),
          column_(column),
          expected_(std::move(expected)) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::vector<std::string> expected_;
};

} // namespace tangnet
