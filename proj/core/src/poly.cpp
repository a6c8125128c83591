#include "sl2fd/poly.hpp"

#include <sstream>

#include "sl2fd/errors.hpp"

namespace sl2fd {

namespace {

const Rational kZero;

void require_monomial(const Poly& p, const char* what) {
  if (!p.basis().is_monomial() && !p.is_zero())
    throw BasisMismatch(std::string(what) + " requires a monomial-basis polynomial");
}

// Synthetic division by (x - r): returns the quotient, writes p(r) to rem.
std::vector<Rational> synthetic_divide(std::span<const Rational> c, const Rational& r,
                                       Rational& rem) {
  if (c.empty()) {
    rem = 0;
    return {};
  }
  std::vector<Rational> q(c.size() - 1);
  Rational acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    q[i] = acc;
    acc = acc * r + c[i];
  }
  rem = acc;
  return q;
}

// Newton form  c0 + (x - r0)(c1 + (x - r1)(c2 + ...)) with r_i = i*delta,
// expanded into monomials by Horner's rule.
std::vector<Rational> falling_to_monomial(std::span<const Rational> c,
                                          const Rational& delta) {
  std::vector<Rational> out;
  for (std::size_t i = c.size(); i-- > 0;) {
    // out <- out * (x - i*delta) + c[i]
    Rational root = delta * Rational(static_cast<long>(i));
    std::vector<Rational> next(out.size() + 1);
    for (std::size_t j = 0; j < out.size(); ++j) {
      next[j + 1] += out[j];
      next[j] -= root * out[j];
    }
    next[0] += c[i];
    out = std::move(next);
  }
  return out;
}

std::vector<Rational> monomial_to_falling(std::span<const Rational> c,
                                          const Rational& delta) {
  std::vector<Rational> out;
  std::vector<Rational> rest(c.begin(), c.end());
  for (long i = 0; !rest.empty(); ++i) {
    Rational rem;
    rest = synthetic_divide(rest, delta * Rational(i), rem);
    out.push_back(rem);
  }
  return out;
}

}  // namespace

Basis Basis::falling(Rational delta) {
  if (delta.is_zero()) throw DivisionByZero("falling-factorial basis needs a nonzero step");
  return Basis(Kind::Falling, std::move(delta));
}

std::string Basis::str() const {
  return is_monomial() ? "monomial" : "falling(" + delta_.str() + ")";
}

Poly::Poly(std::vector<Rational> coeffs, Basis basis)
    : coeffs_(std::move(coeffs)), basis_(std::move(basis)) {
  trim();
}

Poly Poly::term(int k, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v[static_cast<std::size_t>(k)] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Poly::leading() const {
  return is_zero() ? kZero : coeffs_.back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc;
  if (basis_.is_monomial()) {
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  } else {
    for (std::size_t i = coeffs_.size(); i-- > 0;)
      acc = acc * (x - basis_.delta() * Rational(static_cast<long>(i))) + coeffs_[i];
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    basis_ = o.basis_;
  } else if (!(basis_ == o.basis_)) {
    throw BasisMismatch("adding polynomials in " + basis_.str() + " and " + o.basis_.str());
  }
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::string power;
    if (i > 0) {
      if (basis_.is_monomial())
        power = i == 1 ? var : var + "^" + std::to_string(i);
      else
        power = var + "^(" + std::to_string(i) + ")";
    }
    if (power.empty())
      os << mag;
    else if (mag == Rational(1))
      os << power;
    else
      os << mag << "*" << power;
  }
  return os.str();
}

Poly operator*(const Poly& p, const Poly& q) {
  require_monomial(p, "poly_mul");
  require_monomial(q, "poly_mul");
  if (p.is_zero() || q.is_zero()) return Poly();
  std::vector<Rational> out(p.coeffs().size() + q.coeffs().size() - 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.coeffs().size(); ++j)
      out[i + j] += p.coeffs()[i] * q.coeffs()[j];
  }
  return Poly(std::move(out));
}

Poly poly_shift(const Poly& p, const Rational& c) {
  require_monomial(p, "poly_shift");
  if (c.is_zero() || p.degree() < 1) return p;
  // Taylor shift by repeated Horner sweeps.
  std::vector<Rational> a(p.coeffs().begin(), p.coeffs().end());
  const std::size_t n = a.size() - 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = n - 1; j + 1 > i; --j) a[j] += c * a[j + 1];
  return Poly(std::move(a));
}

Poly derivative(const Poly& p, int order) {
  require_monomial(p, "derivative");
  if (order <= 0) return p;
  if (p.degree() < order) return Poly();
  std::vector<Rational> out(static_cast<std::size_t>(p.degree() - order + 1));
  for (int k = order; k <= p.degree(); ++k) {
    mpz_class fall = 1;
    for (int i = 0; i < order; ++i) fall *= (k - i);
    out[static_cast<std::size_t>(k - order)] = p.coeff(k) * Rational(mpq_class(fall));
  }
  return Poly(std::move(out));
}

DivRem poly_divrem(const Poly& p, const Poly& d) {
  require_monomial(p, "poly_divrem");
  require_monomial(d, "poly_divrem");
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
  const int dd = d.degree();
  if (p.degree() < dd) return {Poly(), p};
  std::vector<Rational> quo(static_cast<std::size_t>(p.degree() - dd + 1));
  const Rational lead_inv = d.leading().inverse();
  for (int k = p.degree(); k >= dd; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] * lead_inv;
    quo[static_cast<std::size_t>(k - dd)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= c * d.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly falling_factorial(int k, const Rational& delta) {
  std::vector<Rational> unit(static_cast<std::size_t>(k) + 1);
  unit.back() = 1;
  return Poly(falling_to_monomial(unit, delta));
}

Poly change_basis(const Poly& p, const Basis& target) {
  if (p.basis() == target || p.is_zero()) return p.with_basis_tag(target);
  std::vector<Rational> mono = p.basis().is_monomial()
                                   ? std::vector<Rational>(p.coeffs().begin(), p.coeffs().end())
                                   : falling_to_monomial(p.coeffs(), p.basis().delta());
  if (target.is_monomial()) return Poly(std::move(mono));
  return Poly(monomial_to_falling(mono, target.delta()), target);
}

Poly umbral_map(const Poly& p, const Rational& delta) {
  require_monomial(p, "umbral_map");
  return change_basis(p.with_basis_tag(Basis::falling(delta)), Basis::monomial());
}

}  // namespace sl2fd
