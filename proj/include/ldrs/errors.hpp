#pragma once

#include <stdexcept>
#include <string>

namespace ldrs {

/// Bad parameters or mismatched operands supplied by the caller.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Mathematically undefined operation (inverse of zero, division by the characteristic).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A state-space or enumeration budget would be exceeded. Never a silent truncation.
class CapacityError : public std::length_error {
public:
    CapacityError(const std::string& what, unsigned long long required, unsigned long long limit)
        : std::length_error(what + " (required " + std::to_string(required) + ", limit " +
                            std::to_string(limit) + ")"),
          required_(required), limit_(limit) {}

    unsigned long long required() const noexcept { return required_; }
    unsigned long long limit() const noexcept { return limit_; }

private:
    unsigned long long required_;
    unsigned long long limit_;
};

/// An internal consistency check failed while building a certified object.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ldrs
