#pragma once

#include <stdexcept>
#include <string>

namespace enumcount {

/// An argument outside the documented range of an operation.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The count table does not reach the degree an operation needs.
class TableTooShortError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A quantity that must be a (nonnegative) integer came out otherwise.
/// Never a valid state; always an implementation or transcription bug.
class IntegralityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Two independent determinations of the same coefficient disagree.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed table file. line() is 1-based; 0 when the problem is the file as a whole.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A well-formed table whose values contradict the known counts.
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace enumcount
