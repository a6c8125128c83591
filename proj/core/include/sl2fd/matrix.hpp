#pragma once

#include <string>
#include <vector>

#include "sl2fd/operators.hpp"

namespace sl2fd {

/// Dense exact matrix, row-major.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(int rows, int cols);
  explicit MatrixQ(int dim) : MatrixQ(dim, dim) {}
  /// Row-major nested initializer; all rows must have equal length.
  static MatrixQ from_rows(const std::vector<std::vector<Rational>>& rows);
  static MatrixQ identity(int dim);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Side length of a square matrix.
  int dim() const { return rows_; }

  Rational& operator()(int r, int c) { return data_[index(r, c)]; }
  const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }

  std::vector<Rational> diagonal() const;
  Rational trace() const;
  bool is_zero() const;
  /// Zero below the diagonal.
  bool is_upper_triangular() const;

  friend MatrixQ operator*(const MatrixQ& x, const MatrixQ& y);
  friend MatrixQ operator+(const MatrixQ& x, const MatrixQ& y);
  friend MatrixQ operator-(const MatrixQ& x, const MatrixQ& y);
  friend MatrixQ operator*(const Rational& c, MatrixQ m);
  friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

  std::string str() const;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Column j holds the coordinates of op(e_j) in `basis`, j = 0..dmax.
/// Throws ImageEscapesTruncation when an image has degree > dmax.
MatrixQ matrix_in_basis(const Operator& op, const Basis& basis, int dmax);

/// Rectangular variant: columns for e_0..e_dmax, rows for e_0..e_(dmax+headroom).
MatrixQ matrix_in_basis(const Operator& op, const Basis& basis, int dmax, int headroom);

/// Monic characteristic polynomial det(t I - M), in the monomial basis.
Poly char_poly(const MatrixQ& m);

/// p(M) by Horner's rule.
MatrixQ evaluate_at(const Poly& p, const MatrixQ& m);

/// The basis-change matrix whose column j is e_j of `from` written in `to`.
MatrixQ basis_change_matrix(const Basis& from, const Basis& to, int dmax);

}  // namespace sl2fd
