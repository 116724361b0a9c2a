#pragma once

#include <stdexcept>
#include <string>

namespace slicealg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation point outside the domain of a slice function (e.g. a real
/// point for a product-domain expression).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two imaginary units that must be distinct coincide within tolerance.
class DegenerateUnits : public Error {
 public:
  using Error::Error;
};

class ZeroEigenvalue : public Error {
 public:
  using Error::Error;
};

/// Coefficient bound n!|a_n| <= C (n+1)^d |lambda|^n fails on the supplied data.
class CertificateViolation : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the admissible range of a construction.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// The stem evaluator of a slice expression depends on the probing unit.
class StemSymmetryError : public Error {
 public:
  using Error::Error;
};

class GridTooSmall : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace slicealg
