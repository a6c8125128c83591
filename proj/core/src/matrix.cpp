#include "sl2fd/matrix.hpp"

#include <sstream>

#include "sl2fd/errors.hpp"

namespace sl2fd {

MatrixQ::MatrixQ(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
}

MatrixQ MatrixQ::from_rows(const std::vector<std::vector<Rational>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows.front().size()) : 0;
  MatrixQ m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

MatrixQ MatrixQ::identity(int dim) {
  MatrixQ m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> MatrixQ::diagonal() const {
  std::vector<Rational> d;
  for (int i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
  return d;
}

Rational MatrixQ::trace() const {
  Rational t;
  for (const auto& v : diagonal()) t += v;
  return t;
}

bool MatrixQ::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

bool MatrixQ::is_upper_triangular() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < std::min(i, cols_); ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

MatrixQ operator*(const MatrixQ& x, const MatrixQ& y) {
  if (x.cols_ != y.rows_) throw Error("matrix product dimension mismatch");
  MatrixQ out(x.rows_, y.cols_);
  for (int i = 0; i < x.rows_; ++i)
    for (int k = 0; k < x.cols_; ++k) {
      const Rational& a = x(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < y.cols_; ++j)
        if (!y(k, j).is_zero()) out(i, j) += a * y(k, j);
    }
  return out;
}

MatrixQ operator+(const MatrixQ& x, const MatrixQ& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error("matrix sum dimension mismatch");
  MatrixQ out = x;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += y.data_[i];
  return out;
}

MatrixQ operator-(const MatrixQ& x, const MatrixQ& y) { return x + Rational(-1) * y; }

MatrixQ operator*(const Rational& c, MatrixQ m) {
  for (auto& v : m.data_) v *= c;
  return m;
}

std::string MatrixQ::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

MatrixQ matrix_in_basis(const Operator& op, const Basis& basis, int dmax) {
  return matrix_in_basis(op, basis, dmax, 0);
}

MatrixQ matrix_in_basis(const Operator& op, const Basis& basis, int dmax, int headroom) {
  if (dmax < 0 || headroom < 0) throw Error("negative truncation degree");
  const int nrows = dmax + headroom + 1;
  MatrixQ m(nrows, dmax + 1);
  for (int j = 0; j <= dmax; ++j) {
    std::vector<Rational> unit(static_cast<std::size_t>(j) + 1);
    unit.back() = 1;
    Poly image = op.apply(Poly(std::move(unit), basis));
    if (image.degree() >= nrows) throw ImageEscapesTruncation(j, image.degree());
    Poly coords = change_basis(image, basis);
    for (int i = 0; i <= coords.degree(); ++i) m(i, j) = coords.coeff(i);
  }
  return m;
}

Poly char_poly(const MatrixQ& m) {
  if (!m.is_square()) throw Error("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
  const int n = m.dim();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  MatrixQ mk(n);
  const MatrixQ id = MatrixQ::identity(n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk + c[static_cast<std::size_t>(n - k + 1)] * id;
    c[static_cast<std::size_t>(n - k)] = -(m * mk).trace() / Rational(k);
  }
  return Poly(std::move(c));
}

MatrixQ evaluate_at(const Poly& p, const MatrixQ& m) {
  if (!m.is_square()) throw Error("polynomial of a non-square matrix");
  Poly mono = change_basis(p, Basis::monomial());
  MatrixQ acc(m.dim());
  const MatrixQ id = MatrixQ::identity(m.dim());
  for (int i = mono.degree(); i >= 0; --i) acc = m * acc + mono.coeff(i) * id;
  return acc;
}

MatrixQ basis_change_matrix(const Basis& from, const Basis& to, int dmax) {
  MatrixQ m(dmax + 1);
  for (int j = 0; j <= dmax; ++j) {
    std::vector<Rational> unit(static_cast<std::size_t>(j) + 1);
    unit.back() = 1;
    Poly coords = change_basis(Poly(std::move(unit), from), to);
    for (int i = 0; i <= coords.degree(); ++i) m(i, j) = coords.coeff(i);
  }
  return m;
}

}  // namespace sl2fd
