#include "sl2fd/expr.hpp"

#include <algorithm>
#include <sstream>

#include "sl2fd/errors.hpp"

namespace sl2fd {

HeisenbergRep HeisenbergRep::difference(Rational delta) {
  if (delta.is_zero()) throw DivisionByZero("delta must be nonzero");
  HeisenbergRep r;
  r.kind_ = Kind::Difference;
  r.delta_ = std::move(delta);
  return r;
}

Basis HeisenbergRep::natural_basis() const {
  return is_difference() ? Basis::falling(delta_) : Basis::monomial();
}

std::string HeisenbergRep::name() const {
  return is_difference() ? "difference" : "differential";
}

std::string HeisenbergRep::str() const {
  return is_difference() ? "difference(delta=" + delta_.str() + ")" : "differential";
}

OpExpr OpExpr::make(Kind k, Rational v, std::vector<OpExpr> children) {
  return OpExpr(std::make_shared<const Node>(Node{k, std::move(v), std::move(children)}));
}

OpExpr OpExpr::gen_a() { return make(Kind::GenA, 0, {}); }
OpExpr OpExpr::gen_b() { return make(Kind::GenB, 0, {}); }
OpExpr OpExpr::scalar(const Rational& c) { return make(Kind::Scalar, c, {}); }

namespace {

void append_flat(std::vector<OpExpr>& out, const OpExpr& x, OpExpr::Kind k) {
  if (x.kind() == k)
    out.insert(out.end(), x.children().begin(), x.children().end());
  else
    out.push_back(x);
}

}  // namespace

OpExpr operator+(const OpExpr& x, const OpExpr& y) {
  std::vector<OpExpr> kids;
  append_flat(kids, x, OpExpr::Kind::Sum);
  append_flat(kids, y, OpExpr::Kind::Sum);
  return OpExpr::make(OpExpr::Kind::Sum, 0, std::move(kids));
}

OpExpr operator-(const OpExpr& x, const OpExpr& y) { return x + (-y); }

OpExpr operator*(const OpExpr& x, const OpExpr& y) {
  std::vector<OpExpr> kids;
  append_flat(kids, x, OpExpr::Kind::Product);
  append_flat(kids, y, OpExpr::Kind::Product);
  return OpExpr::make(OpExpr::Kind::Product, 0, std::move(kids));
}

OpExpr operator*(const Rational& c, const OpExpr& x) {
  return OpExpr::make(OpExpr::Kind::ScalarMul, c, {x});
}

int OpExpr::generator_count() const {
  switch (kind()) {
    case Kind::GenA:
    case Kind::GenB:
      return 1;
    case Kind::Scalar:
      return 0;
    default: {
      int n = 0;
      for (const auto& c : children()) n += c.generator_count();
      return n;
    }
  }
}

int OpExpr::raising_count() const {
  switch (kind()) {
    case Kind::GenB:
      return 1;
    case Kind::GenA:
    case Kind::Scalar:
      return 0;
    case Kind::Sum: {
      int n = 0;
      for (const auto& c : children()) n = std::max(n, c.raising_count());
      return n;
    }
    default: {
      int n = 0;
      for (const auto& c : children()) n += c.raising_count();
      return n;
    }
  }
}

std::string OpExpr::str() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::GenA:
      return "a";
    case Kind::GenB:
      return "b";
    case Kind::Scalar:
      return value().str();
    case Kind::ScalarMul:
      os << value() << "*" << children().front().str();
      return os.str();
    case Kind::Sum:
    case Kind::Product: {
      const char* sep = kind() == Kind::Sum ? " + " : "*";
      os << "(";
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i) os << sep;
        os << children()[i].str();
      }
      os << ")";
      return os.str();
    }
  }
  return os.str();
}

OpExpr power(const OpExpr& x, int k) {
  if (k <= 0) return OpExpr::scalar(1);
  OpExpr out = x;
  for (int i = 1; i < k; ++i) out = out * x;
  return out;
}

OpExpr polynomial_in_b(std::span<const Rational> coeffs) {
  OpExpr out = OpExpr::scalar(coeffs.empty() ? Rational(0) : coeffs[0]);
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    out = out + coeffs[i] * power(OpExpr::gen_b(), static_cast<int>(i));
  return out;
}

HeisenbergPair heisenberg_pair(const HeisenbergRep& rep) {
  if (!rep.is_difference())
    return {DiffOp::derivative(1), DiffOp::multiply(Poly::x())};
  const Rational& d = rep.delta();
  // x (1 - delta D-) collapses to x E^-1.
  ShiftOp b = ShiftOp::multiply(d, Poly::x()) *
              (ShiftOp::identity(d) - d * ShiftOp::backward_difference(d));
  return {ShiftOp::forward_difference(d), b};
}

namespace {

Operator realize_node(const OpExpr& e, const HeisenbergPair& pair, const Operator& one) {
  switch (e.kind()) {
    case OpExpr::Kind::GenA:
      return pair.a;
    case OpExpr::Kind::GenB:
      return pair.b;
    case OpExpr::Kind::Scalar:
      return one * e.value();
    case OpExpr::Kind::ScalarMul:
      return realize_node(e.children().front(), pair, one) * e.value();
    case OpExpr::Kind::Sum: {
      Operator acc = one * Rational(0);
      for (const auto& c : e.children()) acc += realize_node(c, pair, one);
      return acc;
    }
    case OpExpr::Kind::Product: {
      Operator acc = one;
      for (const auto& c : e.children()) acc = acc * realize_node(c, pair, one);
      return acc;
    }
  }
  throw Error("unknown expression node");
}

}  // namespace

Operator realize(const OpExpr& expr, const HeisenbergRep& rep) {
  HeisenbergPair pair = heisenberg_pair(rep);
  Operator one = pair.a.scalar_like(1);
  return realize_node(expr, pair, one);
}

}  // namespace sl2fd
