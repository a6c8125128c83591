#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sl2fd/rational.hpp"

namespace sl2fd {

/// Tag telling how a coefficient vector is to be read: either powers x^k or
/// the falling factorials x^(k) = x(x - d)(x - 2d)...(x - (k-1)d).
class Basis {
 public:
  enum class Kind { Monomial, Falling };

  static Basis monomial() { return Basis(); }
  /// Throws DivisionByZero when delta is zero.
  static Basis falling(Rational delta);

  Kind kind() const { return kind_; }
  bool is_monomial() const { return kind_ == Kind::Monomial; }
  /// Step of a falling-factorial basis; zero for the monomial basis.
  const Rational& delta() const { return delta_; }

  std::string str() const;

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  Basis() = default;
  Basis(Kind k, Rational d) : kind_(k), delta_(std::move(d)) {}
  Kind kind_ = Kind::Monomial;
  Rational delta_;
};

/// Dense univariate polynomial over Q. The zero polynomial has no stored
/// coefficients; otherwise the last coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs, Basis basis = Basis::monomial());

  static Poly constant(const Rational& c) { return Poly({c}); }
  /// c * x^k in the monomial basis.
  static Poly term(int k, const Rational& c = 1);
  static Poly x() { return term(1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Basis& basis() const { return basis_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of basis element k; zero past the degree.
  const Rational& coeff(int k) const;
  const Rational& leading() const;
  bool is_monic() const { return !is_zero() && leading() == Rational(1); }

  /// Exact evaluation; falling-factorial coefficients are read in Newton form.
  Rational operator()(const Rational& x) const;

  Poly with_basis_tag(Basis b) const { return Poly(coeffs_, std::move(b)); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const { return *this * Rational(-1); }

  /// Zero polynomials compare equal regardless of basis tag.
  friend bool operator==(const Poly& a, const Poly& b);

  /// Human-readable form, e.g. "x^2 - 1/2*x" (monomial) or "x^(2) + 1".
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
  Basis basis_ = Basis::monomial();
};

/// Product of two monomial-basis polynomials. Throws BasisMismatch otherwise.
Poly operator*(const Poly& p, const Poly& q);

/// q(x) = p(x + c), monomial basis only.
Poly poly_shift(const Poly& p, const Rational& c);

Poly derivative(const Poly& p, int order = 1);

/// Euclidean division, monomial basis: p = d * quotient + remainder.
struct DivRem {
  Poly quotient;
  Poly remainder;
};
DivRem poly_divrem(const Poly& p, const Poly& d);

/// x(x - delta)...(x - (k-1)delta) expanded in monomials; 1 for k = 0.
Poly falling_factorial(int k, const Rational& delta);

/// Re-expresses p in `target`. Exact and invertible.
Poly change_basis(const Poly& p, const Basis& target);

/// Sum a_k x^k  ->  sum a_k x^(k) expanded back into monomials.
Poly umbral_map(const Poly& p, const Rational& delta);

}  // namespace sl2fd
