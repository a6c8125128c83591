#include "sl2fd/operators.hpp"

#include <sstream>

#include "sl2fd/errors.hpp"

namespace sl2fd {

// ---------------------------------------------------------------- ShiftOp

ShiftOp::ShiftOp(Rational delta) : delta_(std::move(delta)) {
  if (delta_.is_zero()) throw DivisionByZero("shift operator step must be nonzero");
}

ShiftOp::ShiftOp(Rational delta, Terms terms) : ShiftOp(std::move(delta)) {
  terms_ = std::move(terms);
  for (auto& [s, p] : terms_)
    if (!p.basis().is_monomial() && !p.is_zero())
      p = change_basis(p, Basis::monomial());
  prune();
}

void ShiftOp::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

ShiftOp ShiftOp::multiply(const Rational& delta, const Poly& p) {
  return ShiftOp(delta, {{0, p}});
}

ShiftOp ShiftOp::shift(const Rational& delta, int s) {
  return ShiftOp(delta, {{s, Poly::constant(1)}});
}

ShiftOp ShiftOp::forward_difference(const Rational& delta) {
  Rational inv = delta.inverse();
  return ShiftOp(delta, {{1, Poly::constant(inv)}, {0, Poly::constant(-inv)}});
}

ShiftOp ShiftOp::backward_difference(const Rational& delta) {
  Rational inv = delta.inverse();
  return ShiftOp(delta, {{0, Poly::constant(inv)}, {-1, Poly::constant(-inv)}});
}

Poly ShiftOp::coeff(int s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Poly() : it->second;
}

std::set<int> ShiftOp::support() const {
  std::set<int> out;
  for (const auto& [s, p] : terms_) out.insert(s);
  return out;
}

ShiftOp ShiftOp::with_step(const Rational& step) const {
  if (step == delta_) return *this;
  bool local = terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  if (local) return ShiftOp(step, terms_);
  if (step == -delta_) {
    Terms flipped;
    for (const auto& [s, p] : terms_) flipped.emplace(-s, p);
    return ShiftOp(step, std::move(flipped));
  }
  throw DeltaMismatch("cannot express step " + delta_.str() + " operator with step " +
                      step.str());
}

Poly ShiftOp::apply(const Poly& p) const {
  Poly in = p.basis().is_monomial() ? p : change_basis(p, Basis::monomial());
  Poly out;
  for (const auto& [s, coeff] : terms_)
    out += coeff * poly_shift(in, delta_ * Rational(s));
  return out;
}

ShiftOp& ShiftOp::operator+=(const ShiftOp& o) {
  ShiftOp rhs = o.with_step(delta_);
  for (const auto& [s, p] : rhs.terms_) terms_[s] += p;
  prune();
  return *this;
}

ShiftOp& ShiftOp::operator-=(const ShiftOp& o) { return *this += o * Rational(-1); }

ShiftOp& ShiftOp::operator*=(const Rational& c) {
  for (auto& [s, p] : terms_) p *= c;
  prune();
  return *this;
}

bool operator==(const ShiftOp& a, const ShiftOp& b) {
  if (a.delta_ == b.delta_) return a.terms_ == b.terms_;
  try {
    return a.terms_ == b.with_step(a.delta_).terms_;
  } catch (const DeltaMismatch&) {
    return false;
  }
}

std::string ShiftOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    if (it->first != 0) os << "*E^" << it->first;
  }
  os << "  [delta=" << delta_ << "]";
  return os.str();
}

ShiftOp compose(const ShiftOp& outer, const ShiftOp& inner_in) {
  ShiftOp inner = inner_in.with_step(outer.delta());
  ShiftOp::Terms out;
  for (const auto& [a, p] : outer.terms()) {
    for (const auto& [b, q] : inner.terms()) {
      out[a + b] += p * poly_shift(q, outer.delta() * Rational(a));
    }
  }
  return ShiftOp(outer.delta(), std::move(out));
}

ShiftOp operator*(const ShiftOp& outer, const ShiftOp& inner) { return compose(outer, inner); }

ShiftOp commutator(const ShiftOp& x, const ShiftOp& y) { return x * y - y * x; }

std::set<int> shift_support(const ShiftOp& op) { return op.support(); }

// ---------------------------------------------------------------- DiffOp

DiffOp::DiffOp(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& p : coeffs_)
    if (!p.basis().is_monomial() && !p.is_zero()) p = change_basis(p, Basis::monomial());
  trim();
}

void DiffOp::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  // Canonical tag for zero coefficients keeps defaulted equality structural.
  for (auto& p : coeffs_)
    if (p.is_zero()) p = Poly();
}

DiffOp DiffOp::multiply(const Poly& p) { return DiffOp({p}); }

DiffOp DiffOp::derivative(int order) {
  std::vector<Poly> c(static_cast<std::size_t>(order) + 1);
  c.back() = Poly::constant(1);
  return DiffOp(std::move(c));
}

Poly DiffOp::coeff(int j) const {
  if (j < 0 || j > order()) return Poly();
  return coeffs_[static_cast<std::size_t>(j)];
}

Poly DiffOp::apply(const Poly& p) const {
  Poly in = p.basis().is_monomial() ? p : change_basis(p, Basis::monomial());
  Poly out;
  for (int j = 0; j <= order(); ++j) {
    const Poly& q = coeffs_[static_cast<std::size_t>(j)];
    if (q.is_zero()) continue;
    out += q * sl2fd::derivative(in, j);
  }
  return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  trim();
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) { return *this += o * Rational(-1); }

DiffOp& DiffOp::operator*=(const Rational& c) {
  for (auto& p : coeffs_) p *= c;
  trim();
  return *this;
}

std::string DiffOp::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = order(); j >= 0; --j) {
    const Poly& q = coeffs_[static_cast<std::size_t>(j)];
    if (q.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << q.str() << ")";
    if (j == 1) os << "*d";
    if (j > 1) os << "*d^" << j;
  }
  return os.str();
}

DiffOp compose(const DiffOp& outer, const DiffOp& inner) {
  // q d^i o r d^j = q * sum_m C(i,m) r^(m) d^(i-m+j)
  std::vector<Poly> out;
  for (int i = 0; i <= outer.order(); ++i) {
    const Poly& q = outer.coeffs()[static_cast<std::size_t>(i)];
    if (q.is_zero()) continue;
    for (int j = 0; j <= inner.order(); ++j) {
      const Poly& r = inner.coeffs()[static_cast<std::size_t>(j)];
      if (r.is_zero()) continue;
      for (int m = 0; m <= i && m <= r.degree(); ++m) {
        auto idx = static_cast<std::size_t>(i - m + j);
        if (out.size() <= idx) out.resize(idx + 1);
        out[idx] += binomial(i, m) * (q * derivative(r, m));
      }
    }
  }
  return DiffOp(std::move(out));
}

DiffOp operator*(const DiffOp& outer, const DiffOp& inner) { return compose(outer, inner); }

DiffOp commutator(const DiffOp& x, const DiffOp& y) { return x * y - y * x; }

// ---------------------------------------------------------------- Operator

const ShiftOp& Operator::as_shift() const {
  if (!is_shift()) throw KindMismatch("operator is not a shift operator");
  return std::get<ShiftOp>(op_);
}

const DiffOp& Operator::as_diff() const {
  if (!is_diff()) throw KindMismatch("operator is not a differential operator");
  return std::get<DiffOp>(op_);
}

bool Operator::is_zero() const {
  return std::visit([](const auto& o) { return o.is_zero(); }, op_);
}

Poly Operator::apply(const Poly& p) const {
  return std::visit([&](const auto& o) { return o.apply(p); }, op_);
}

Operator Operator::scalar_like(const Rational& c) const {
  if (is_shift()) return ShiftOp::multiply(as_shift().delta(), Poly::constant(c));
  return DiffOp::multiply(Poly::constant(c));
}

namespace {

template <typename Fn>
Operator binary(const Operator& a, const Operator& b, Fn fn, const char* what) {
  if (a.is_shift() && b.is_shift()) return fn(a.as_shift(), b.as_shift());
  if (a.is_diff() && b.is_diff()) return fn(a.as_diff(), b.as_diff());
  throw KindMismatch(std::string(what) + " of a shift operator with a differential operator");
}

}  // namespace

Operator& Operator::operator+=(const Operator& o) {
  *this = binary(*this, o, [](const auto& x, const auto& y) { return x + y; }, "sum");
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  *this = binary(*this, o, [](const auto& x, const auto& y) { return x - y; }, "difference");
  return *this;
}

Operator& Operator::operator*=(const Rational& c) {
  std::visit([&](auto& o) { o *= c; }, op_);
  return *this;
}

std::string Operator::str() const {
  return std::visit([](const auto& o) { return o.str(); }, op_);
}

Operator compose(const Operator& outer, const Operator& inner) {
  return binary(outer, inner, [](const auto& x, const auto& y) { return Operator(x * y); },
                "composition");
}

Operator operator*(const Operator& outer, const Operator& inner) { return compose(outer, inner); }

Operator commutator(const Operator& x, const Operator& y) {
  return binary(x, y, [](const auto& a, const auto& b) { return Operator(commutator(a, b)); },
                "commutator");
}

}  // namespace sl2fd
