#pragma once

#include <stdexcept>
#include <string>

namespace symsector {

/// Raised for arguments that violate an operation's preconditions.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The antisymmetric sector of n qudits exists only for n <= d.
class SectorMissing : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// A construction would exceed the configured d^n cap (SYMSECTOR_SIZE_CAP).
class SizeCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Closed forms that only hold for prime n are refused on composite n.
class RegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class EigenSolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace symsector
