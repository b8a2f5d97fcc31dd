#pragma once

#include <stdexcept>
#include <string>

namespace structkit {

// Base of every error raised by the library. The CLI maps each subclass
// onto an exit code (see cli.hpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input document (JSON, rational literal, pattern symbol).
class ParseError : public Error {
public:
    using Error::Error;
};

// Incompatible matrix/system dimensions.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Mathematical domain violation: division by zero, gcd(0, 0), non-monic
// input where a monic polynomial is required, ...
class DomainError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public DomainError {
public:
    using DomainError::DomainError;
};

class IrrationalSpectrumError : public DomainError {
public:
    using DomainError::DomainError;
};

class DefectiveMatrixError : public DomainError {
public:
    using DomainError::DomainError;
};

// A system handed to a specialised decision procedure is outside the class
// that procedure characterises (e.g. not minimal, A not diagonal).
class NotInClassError : public Error {
public:
    using Error::Error;
};

// Brute-force search refused because the instance is too large.
class TooLargeError : public Error {
public:
    using Error::Error;
};

// Requested block count lies outside the feasible interval [k, d].
class InfeasibleCountError : public Error {
public:
    using Error::Error;
};

// Construction not applicable to the given structured system.
class NotApplicableError : public Error {
public:
    using Error::Error;
};

// Parameter vector lies on the exceptional set of a construction.
class ExceptionalParameterError : public NotApplicableError {
public:
    using NotApplicableError::NotApplicableError;
};

}  // namespace structkit
