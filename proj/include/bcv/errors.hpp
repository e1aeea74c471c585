#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bcv {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arguments outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Key not present in a lookup table (item ids, Lawshe panel sizes).
class LookupError : public Error {
public:
    using Error::Error;
};

// Inputs that are individually valid but inconsistent with each other.
class ConfigError : public Error {
public:
    using Error::Error;
};

// A validation question that has no answer, e.g. an item nobody rated.
class UndecidableError : public Error {
public:
    using Error::Error;
};

// Malformed survey input. line() is 1-based; 0 when unknown.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DuplicateResponseError : public ParseError {
public:
    using ParseError::ParseError;
};

class ScaleViolationError : public ParseError {
public:
    using ParseError::ParseError;
};

} // namespace bcv
