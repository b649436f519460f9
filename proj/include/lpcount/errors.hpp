#pragma once

#include <stdexcept>
#include <string>

namespace lpcount {

/// Root of the library's error hierarchy.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Malformed document, schema violation, or desk-scale limit breach.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Operand sizes disagree (vector lengths, variable counts, matrix shape).
class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

/// Exact elimination found the matrix singular.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// The half-space intersection is not a bounded, nonempty, full-dimensional
/// polytope.
class GeometryError : public Error {
public:
    using Error::Error;
};

class UnboundedError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class EmptyError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// Nonempty and bounded but not full-dimensional.
class DegenerateError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// Input fails an integrality / simplicity / Delzant requirement.
class ValidationError : public Error {
public:
    using Error::Error;
};

class NotIntegralError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotSimpleError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotDelzantError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Enumeration cell guard or exact 64-bit range exceeded.
class GuardError : public Error {
public:
    using Error::Error;
};

/// A cross-checked internal invariant failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace lpcount
