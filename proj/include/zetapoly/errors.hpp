#ifndef ZETAPOLY_ERRORS_HPP
#define ZETAPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace zetapoly {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation point too close to a pole (an integer zero of p_N, or a root of unity).
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Request exceeds what the implementation can deliver (e.g. stored-constant precision).
class CapabilityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed caller-supplied data (incomplete character tables, bad rationals, ...).
class InputError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A symbolic expression referenced a constant with no numeric binding.
class BindingError : public DomainError {
public:
    BindingError(std::string symbol)
        : DomainError("no numeric binding for symbol '" + symbol + "'"), symbol_(std::move(symbol)) {}

    const std::string& symbol() const noexcept { return symbol_; }

private:
    std::string symbol_;
};

} // namespace zetapoly

#endif
