#pragma once

#include <stdexcept>
#include <string>

namespace sl2fd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, basis names, JSON payloads).
class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class BasisMismatch : public Error {
 public:
  using Error::Error;
};

class DeltaMismatch : public Error {
 public:
  using Error::Error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

/// An operator image needs a basis element beyond the truncation degree.
class ImageEscapesTruncation : public Error {
 public:
  ImageEscapesTruncation(int column, int needed_degree)
      : Error("image of column " + std::to_string(column) + " needs degree " +
              std::to_string(needed_degree)),
        column(column),
        needed_degree(needed_degree) {}
  int column;
  int needed_degree;
};

/// Back-substitution hit lambda_low == lambda_high with an inconsistent row,
/// so no eigenpolynomial of degree `high` exists.
class DegenerateSpectrum : public Error {
 public:
  DegenerateSpectrum(int low, int high)
      : Error("degenerate spectrum: lambda_" + std::to_string(low) +
              " == lambda_" + std::to_string(high)),
        low(low),
        high(high) {}
  int low;
  int high;
};

/// A QES operator mapped the degree <= n space outside itself.
class InvarianceViolation : public Error {
 public:
  explicit InvarianceViolation(int column)
      : Error("invariant subspace escaped at column " + std::to_string(column)),
        column(column) {}
  int column;
};

/// Division by x^(N) left a remainder; the factorization theorem failed.
class NonzeroRemainder : public Error {
 public:
  using Error::Error;
};

}  // namespace sl2fd
