#pragma once

#include <stdexcept>
#include <string>

namespace modsym {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (file syntax, missing fields, wrong shapes).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input violates a type invariant (theta_0 != 1, s_00 != 1, bad name, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Arithmetic misuse: mismatched field orders, division by zero,
/// non-invertible Galois residue, element outside a requested subfield.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The data fails one of the modular-data axioms.
class NotModular : public Error {
 public:
  using Error::Error;
};

/// Verlinde formula produced a non-integral or negative multiplicity.
class VerlindeFailure : public NotModular {
 public:
  using NotModular::NotModular;
};

/// A statement that is a theorem for genuine modular data did not hold.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure (two independent computations disagree).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace modsym
