#ifndef SEXTIC_ERRORS_H
#define SEXTIC_ERRORS_H

#include <stdexcept>
#include <string>

namespace sextic {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Malformed field spec string or element literal.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Well-formed spec describing an unusable field (d not squarefree, p composite, ...).
class InvalidFieldError : public Error {
public:
  using Error::Error;
};

/// Characteristic 2 is outside the classifier's scope.
class UnsupportedCharacteristicError : public Error {
public:
  using Error::Error;
};

/// Operands belong to different fields.
class FieldMismatchError : public Error {
public:
  using Error::Error;
};

/// A precondition on an operation's arguments was violated.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Certified-precision escalation exhausted its cap without a stable answer.
class PrecisionError : public Error {
public:
  using Error::Error;
};

/// Numeric orbit comparison could not separate values at the precision cap.
class AmbiguityError : public Error {
public:
  using Error::Error;
};

/// An internally impossible predicate combination was reached; indicates a bug.
class InternalInconsistencyError : public Error {
public:
  using Error::Error;
};

/// A constructed automorphism set failed the group axioms; indicates a bug.
class ModelConstructionError : public Error {
public:
  using Error::Error;
};

/// Every candidate group was excluded by the observed cycle types.
class NoCandidateError : public Error {
public:
  using Error::Error;
};

/// No usable primes remained after sieving for a Frobenius sample.
class EmptySampleError : public Error {
public:
  using Error::Error;
};

} // namespace sextic

#endif
