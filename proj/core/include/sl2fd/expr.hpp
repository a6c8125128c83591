#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sl2fd/operators.hpp"

namespace sl2fd {

/// Concrete realization of the Heisenberg pair [a, b] = 1:
///   Differential:  a = d/dx,  b = x
///   Difference:    a = D+,    b = x(1 - delta D-) = x E^-1
class HeisenbergRep {
 public:
  enum class Kind { Differential, Difference };

  static HeisenbergRep differential() { return HeisenbergRep(); }
  /// Throws DivisionByZero for delta == 0.
  static HeisenbergRep difference(Rational delta);

  Kind kind() const { return kind_; }
  bool is_difference() const { return kind_ == Kind::Difference; }
  /// Step of the difference realization; zero for the differential one.
  const Rational& delta() const { return delta_; }

  /// Basis in which b^k |0> is the k-th basis element: monomials for the
  /// differential realization, delta-falling factorials for the difference one.
  Basis natural_basis() const;

  /// "differential" or "difference".
  std::string name() const;
  std::string str() const;

  friend bool operator==(const HeisenbergRep&, const HeisenbergRep&) = default;

 private:
  HeisenbergRep() = default;
  Kind kind_ = Kind::Differential;
  Rational delta_;
};

/// Representation-independent word in the abstract generators a and b.
///
/// Sums and products are flattened n-ary nodes; products keep their order and
/// are never normal-ordered at this level. Nodes are immutable and shared.
class OpExpr {
 public:
  enum class Kind { GenA, GenB, Scalar, Sum, Product, ScalarMul };

  static OpExpr gen_a();
  static OpExpr gen_b();
  static OpExpr scalar(const Rational& c);

  Kind kind() const { return node_->kind; }
  const Rational& value() const { return node_->value; }
  const std::vector<OpExpr>& children() const { return node_->children; }

  /// Number of generator leaves (a or b) in the tree.
  int generator_count() const;
  /// Number of b leaves; bounds the degree increase of the realized operator.
  int raising_count() const;

  std::string str() const;

  friend OpExpr operator+(const OpExpr& x, const OpExpr& y);
  friend OpExpr operator-(const OpExpr& x, const OpExpr& y);
  friend OpExpr operator*(const OpExpr& x, const OpExpr& y);
  friend OpExpr operator*(const Rational& c, const OpExpr& x);
  friend OpExpr operator*(const OpExpr& x, const Rational& c) { return c * x; }
  OpExpr operator-() const { return Rational(-1) * *this; }

 private:
  struct Node {
    Kind kind;
    Rational value;
    std::vector<OpExpr> children;
  };
  explicit OpExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static OpExpr make(Kind k, Rational v, std::vector<OpExpr> children);
  std::shared_ptr<const Node> node_;
};

/// x^k as an ordered product; x^0 is the scalar 1.
OpExpr power(const OpExpr& x, int k);

/// B(b) = sum_i coeffs[i] b^i.
OpExpr polynomial_in_b(std::span<const Rational> coeffs);

/// Substitutes the representation's a and b and reduces to normal form.
Operator realize(const OpExpr& expr, const HeisenbergRep& rep);

/// The realized pair (a, b).
struct HeisenbergPair {
  Operator a;
  Operator b;
};
HeisenbergPair heisenberg_pair(const HeisenbergRep& rep);

}  // namespace sl2fd
