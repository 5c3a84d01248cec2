#pragma once

#include <stdexcept>
#include <string>

namespace rhpwn {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input lies outside the mathematical domain of an operation
/// (branch cuts, admissibility bounds, t <= 0, ...). The CLI maps the
/// whole DomainError family to exit code 2.
class DomainError : public Error {
public:
    using Error::Error;
};

class IndexError : public DomainError {
public:
    using DomainError::DomainError;
};

class TagMismatchError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A generator that the truncated engine has no action for.
class UnsupportedGeneratorError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Jet order would exceed the representable cap.
class UnsupportedOrderError : public DomainError {
public:
    using DomainError::DomainError;
};

/// kN - Kn == 0, the commutator prescription cannot be inverted.
class PrescriptionError : public DomainError {
public:
    using DomainError::DomainError;
};

class OutOfScopeError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed JSON input; `pointer()` is an RFC 6901 location.
class SchemaError : public DomainError {
public:
    SchemaError(std::string pointer, const std::string& what)
        : DomainError(what + " at " + (pointer.empty() ? std::string("/") : pointer)),
          pointer_(std::move(pointer)) {}

    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

/// A self-check inside the library failed. Maps to CLI exit code 1.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace rhpwn
