#ifndef ARGSHIFT_ERRORS_HPP
#define ARGSHIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace argshift {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (vector lengths, matrix sizes, variable counts).
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A precondition of an operation does not hold for the given input.
class PreconditionFailed : public Error {
public:
    using Error::Error;
};

/// Input text (JSON, rational literal) could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

/*
 * Raised when a computation contradicts a proven statement (a nonzero bracket
 * inside a shift family, disagreeing regularity predicates, ...). Such an
 * event can only come from an implementation bug, so it carries a serialized
 * reproduction bundle (algebra, points, seed) as a JSON string.
 */
class FalsificationEvent : public Error {
public:
    FalsificationEvent(const std::string& what, std::string bundle)
        : Error(what), bundle_(std::move(bundle)) {}

    const std::string& bundle() const noexcept { return bundle_; }

private:
    std::string bundle_;
};

} // namespace argshift

#endif // ARGSHIFT_ERRORS_HPP
