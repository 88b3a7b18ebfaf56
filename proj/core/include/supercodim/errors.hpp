#ifndef SUPERCODIM_ERRORS_HPP
#define SUPERCODIM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supercodim {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An input exceeds the size an exhaustive routine is willing to handle.
class SizeError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A box move that does not produce a partition.
class InvalidMoveError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// The configured ceiling on matrix entries would be exceeded.
class ResourceError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A computed quantity contradicts a mathematical certainty
/// (non-integral multiplicity, a module action leaving its space, ...).
class IntegrityError : public Error {
public:
    using Error::Error;
};

/// Malformed algebra description. Carries the 1-based source position when known.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column,
               std::string field)
        : Error(format(message, line, column, field)),
          line_(line),
          column_(column),
          field_(std::move(field)) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& field() const noexcept { return field_; }

private:
    static std::string format(const std::string& message, std::size_t line,
                              std::size_t column, const std::string& field) {
        std::string out = "line " + std::to_string(line) + ", column " + std::to_string(column);
        if (!field.empty()) out += ", field '" + field + "'";
        return out + ": " + message;
    }

    std::size_t line_;
    std::size_t column_;
    std::string field_;
};

}  // namespace supercodim

#endif
