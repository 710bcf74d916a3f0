#pragma once

#include <stdexcept>
#include <string>

namespace rdr {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operand dimensions do not match.
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

/// A full-dimensional body was required but the input is flat.
class DegenerateBody : public Error {
public:
    explicit DegenerateBody(const std::string& msg) : Error(msg) {}
};

/// Argument outside the documented domain of a formula or construction.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Numerical breakdown (e.g. vanishing pivot in the LP solver).
class NumericalFailure : public Error {
public:
    explicit NumericalFailure(const std::string& msg) : Error(msg) {}
};

/// No vertex lies on the circumsphere within tolerance.
class NoContacts : public Error {
public:
    explicit NoContacts(const std::string& msg) : Error(msg) {}
};

/// Body is not optimally contained in the unit ball.
class NotOptimallyContained : public Error {
public:
    explicit NotOptimallyContained(const std::string& msg) : Error(msg) {}
};

/// Malformed input file or flag value.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Unknown sampler family or verification suite name.
class UnknownName : public Error {
public:
    explicit UnknownName(const std::string& msg) : Error(msg) {}
};

} // namespace rdr
