#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "sl2fd/poly.hpp"

namespace sl2fd {

/// Finite-difference operator  sum_s p_s(x) E^s  with (E^s f)(x) = f(x + s*delta).
///
/// Coefficients are monomial-basis polynomials; zero coefficients are never
/// stored. A step of -delta with shift s is the same operator as step delta
/// with shift -s, and equality and arithmetic see through that.
class ShiftOp {
 public:
  using Terms = std::map<int, Poly>;

  /// Zero operator with the given (nonzero) step.
  explicit ShiftOp(Rational delta);
  ShiftOp(Rational delta, Terms terms);

  static ShiftOp identity(const Rational& delta) { return multiply(delta, Poly::constant(1)); }
  /// p(x) * identity.
  static ShiftOp multiply(const Rational& delta, const Poly& p);
  /// E^s.
  static ShiftOp shift(const Rational& delta, int s);
  /// D+ f = (f(x + delta) - f(x)) / delta.
  static ShiftOp forward_difference(const Rational& delta);
  /// D- f = (f(x) - f(x - delta)) / delta.
  static ShiftOp backward_difference(const Rational& delta);

  const Rational& delta() const { return delta_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of E^s; zero polynomial if absent.
  Poly coeff(int s) const;

  std::set<int> support() const;

  /// The same operator written with step `step`, which must be +-delta.
  ShiftOp with_step(const Rational& step) const;

  Poly apply(const Poly& p) const;

  ShiftOp& operator+=(const ShiftOp& o);
  ShiftOp& operator-=(const ShiftOp& o);
  ShiftOp& operator*=(const Rational& c);
  friend ShiftOp operator+(ShiftOp a, const ShiftOp& b) { return a += b; }
  friend ShiftOp operator-(ShiftOp a, const ShiftOp& b) { return a -= b; }
  friend ShiftOp operator*(ShiftOp a, const Rational& c) { return a *= c; }
  friend ShiftOp operator*(const Rational& c, ShiftOp a) { return a *= c; }

  friend bool operator==(const ShiftOp& a, const ShiftOp& b);

  std::string str() const;

 private:
  void prune();
  Rational delta_;
  Terms terms_;
};

/// Composition L1 o L2 in normal form: (p E^a)(q E^b) = p(x) q(x + a delta) E^(a+b).
ShiftOp compose(const ShiftOp& outer, const ShiftOp& inner);
ShiftOp operator*(const ShiftOp& outer, const ShiftOp& inner);

/// Differential operator  sum_j q_j(x) d^j/dx^j.
class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(std::vector<Poly> coeffs);

  static DiffOp identity() { return multiply(Poly::constant(1)); }
  static DiffOp multiply(const Poly& p);
  /// d^order/dx^order.
  static DiffOp derivative(int order = 1);

  const std::vector<Poly>& coeffs() const { return coeffs_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Poly coeff(int j) const;

  Poly apply(const Poly& p) const;

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const Rational& c);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const Rational& c) { return a *= c; }
  friend DiffOp operator*(const Rational& c, DiffOp a) { return a *= c; }

  friend bool operator==(const DiffOp& a, const DiffOp& b) = default;

  std::string str() const;

 private:
  void trim();
  std::vector<Poly> coeffs_;
};

/// Leibniz-rule composition D1 o D2.
DiffOp compose(const DiffOp& outer, const DiffOp& inner);
DiffOp operator*(const DiffOp& outer, const DiffOp& inner);

/// A realized operator: either a shift operator or a differential operator.
/// Binary operations between the two kinds throw KindMismatch.
class Operator {
 public:
  Operator(ShiftOp op) : op_(std::move(op)) {}  // NOLINT(google-explicit-constructor)
  Operator(DiffOp op) : op_(std::move(op)) {}   // NOLINT(google-explicit-constructor)

  bool is_shift() const { return std::holds_alternative<ShiftOp>(op_); }
  bool is_diff() const { return std::holds_alternative<DiffOp>(op_); }
  const ShiftOp& as_shift() const;
  const DiffOp& as_diff() const;

  bool is_zero() const;
  Poly apply(const Poly& p) const;
  /// Scalar multiple of the identity of the same kind (and step).
  Operator scalar_like(const Rational& c) const;

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(const Rational& c);
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(Operator a, const Rational& c) { return a *= c; }
  friend Operator operator*(const Rational& c, Operator a) { return a *= c; }

  friend bool operator==(const Operator& a, const Operator& b) { return a.op_ == b.op_; }

  std::string str() const;

  const std::variant<ShiftOp, DiffOp>& variant() const { return op_; }

 private:
  std::variant<ShiftOp, DiffOp> op_;
};

Operator compose(const Operator& outer, const Operator& inner);
Operator operator*(const Operator& outer, const Operator& inner);

/// XY - YX.
Operator commutator(const Operator& x, const Operator& y);
ShiftOp commutator(const ShiftOp& x, const ShiftOp& y);
DiffOp commutator(const DiffOp& x, const DiffOp& y);

/// {s : p_s != 0}.
std::set<int> shift_support(const ShiftOp& op);

}  // namespace sl2fd
