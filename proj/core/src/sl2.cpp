#include "sl2fd/sl2.hpp"

#include "sl2fd/errors.hpp"

namespace sl2fd {

Sl2Words sl2_words(int n) {
  if (n < 0) throw Error("sl2 representation label must be non-negative");
  const OpExpr a = OpExpr::gen_a();
  const OpExpr b = OpExpr::gen_b();
  const Rational nn(n);
  return {b * b * a - nn * b, b * a - OpExpr::scalar(Rational(n, 2)), a};
}

Sl2Triple sl2_generators(int n, const HeisenbergRep& rep) {
  Sl2Words w = sl2_words(n);
  return {realize(w.jplus, rep), realize(w.jzero, rep), realize(w.jminus, rep), n, rep};
}

Sl2Triple explicit_difference_generators(const Rational& delta) {
  const auto rep = HeisenbergRep::difference(delta);
  const Rational inv = delta.inverse();
  const Poly x = Poly::x();
  // x(x/delta - 1) = x^2/delta - x
  Poly plus_coeff = Poly({0, -1, inv});
  ShiftOp jplus(delta, {{-1, plus_coeff}, {-2, -plus_coeff}});
  ShiftOp jzero(delta, {{0, inv * x}, {-1, -inv * x}});
  ShiftOp jminus(delta, {{1, Poly::constant(inv)}, {0, Poly::constant(-inv)}});
  return {jplus, jzero, jminus, 0, rep};
}

namespace {

bool agree_on_monomials(const Operator& lhs, const Operator& rhs, int dmax, std::string& detail) {
  for (int k = 0; k <= dmax; ++k) {
    Poly mono = Poly::term(k);
    if (!(lhs.apply(mono) == rhs.apply(mono))) {
      detail = "mismatch on x^" + std::to_string(k);
      return false;
    }
  }
  return true;
}

void relation(CheckReport& rep, const std::string& name, const Operator& lhs,
              const Operator& rhs, int dmax) {
  std::string detail;
  bool ok = agree_on_monomials(lhs, rhs, dmax, detail);
  rep.add(name, ok, detail);
}

}  // namespace

CheckReport verify_triple(const HeisenbergPair& pair, const Sl2Triple& t, int dmax) {
  CheckReport out;
  const Operator one = pair.a.scalar_like(1);
  relation(out, "heisenberg", commutator(pair.a, pair.b), one, dmax);
  relation(out, "j0_jplus", commutator(t.jzero, t.jplus), t.jplus, dmax);
  relation(out, "j0_jminus", commutator(t.jzero, t.jminus), t.jminus * Rational(-1), dmax);
  relation(out, "jplus_jminus", commutator(t.jplus, t.jminus), t.jzero * Rational(-2), dmax);
  return out;
}

RelationReport verify_relations(int n, const HeisenbergRep& rep, int dmax) {
  if (dmax < n + 3) throw Error("verify_relations needs dmax >= n + 3");
  return {verify_triple(heisenberg_pair(rep), sl2_generators(n, rep), dmax), n, rep};
}

bool annihilator_check(std::span<const Rational> b_coeffs, int n, const HeisenbergRep& rep,
                       int dmax) {
  if (n < 0) throw Error("annihilator degree must be non-negative");
  if (dmax < n) throw Error("annihilator_check needs dmax >= n");
  OpExpr word = polynomial_in_b(b_coeffs) * power(OpExpr::gen_a(), n + 1);
  Operator op = realize(word, rep);
  const Basis basis = rep.natural_basis();
  for (int k = 0; k <= n; ++k) {
    std::vector<Rational> unit(static_cast<std::size_t>(k) + 1);
    unit.back() = 1;
    if (!op.apply(Poly(std::move(unit), basis)).is_zero()) return false;
  }
  return true;
}

bool explicit_generators_match(const Rational& delta) {
  Sl2Triple words = sl2_generators(0, HeisenbergRep::difference(delta));
  Sl2Triple closed = explicit_difference_generators(delta);
  return words.jplus == closed.jplus && words.jzero == closed.jzero &&
         words.jminus == closed.jminus;
}

bool delta_reflection_holds(const Rational& delta) {
  return ShiftOp::forward_difference(-delta) == ShiftOp::backward_difference(delta);
}

}  // namespace sl2fd
