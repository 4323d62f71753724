#ifndef QUADDEC_ERRORS_HPP
#define QUADDEC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quaddec {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An argument outside the domain of an operation (A = 0 in a shift, an
/// unknown family name, an invalid perturbation, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A recurrence coefficient is zero or undefined where a regular sequence
/// needs it. `coefficient` names the stream ("gamma", "beta", ...) and
/// `index` is its subscript.
class RegularityError : public Error {
public:
    RegularityError(std::string coefficient, std::size_t index, const std::string& why)
        : Error(coefficient + "[" + std::to_string(index) + "]: " + why),
          coefficient_(std::move(coefficient)), index_(index)
    {
    }

    const std::string& coefficient() const noexcept { return coefficient_; }
    std::size_t index() const noexcept { return index_; }

private:
    std::string coefficient_;
    std::size_t index_;
};

/// A stated precondition of an algorithm fails at a specific index.
class PreconditionError : public Error {
public:
    PreconditionError(std::size_t index, const std::string& what)
        : Error(what + " (index " + std::to_string(index) + ")"), index_(index)
    {
    }

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

} // namespace quaddec

#endif
