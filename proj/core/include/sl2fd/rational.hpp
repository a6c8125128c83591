#pragma once

#include <gmpxx.h>

#include <concepts>
#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace sl2fd {

/// Exact rational number, always held in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

  Rational(long numerator, long denominator);

  /// Accepts "p", "-p", "p/q" with decimal digits; q must be nonzero.
  static Rational parse(std::string_view text);

  /// Canonical text form "p/q", or "p" when the denominator is 1.
  std::string str() const;

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }
  /// Throws if not an integer or out of range.
  long to_long() const;

  Rational numerator() const;
  Rational denominator() const;
  Rational abs() const;
  Rational inverse() const;

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  std::size_t hash() const;

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Integer power, negative exponents allowed for nonzero bases.
Rational pow(const Rational& base, int exponent);

/// Binomial coefficient C(n, k) as an exact rational; zero outside 0..n.
Rational binomial(int n, int k);

}  // namespace sl2fd

template <>
struct std::hash<sl2fd::Rational> {
  std::size_t operator()(const sl2fd::Rational& r) const { return r.hash(); }
};
