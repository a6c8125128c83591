#include "sl2fd/solvable.hpp"

#include "sl2fd/errors.hpp"
#include "sl2fd/sl2.hpp"

namespace sl2fd {

void validate(const SolvableParams& p) {
  if (p.delta.is_zero()) throw DivisionByZero("delta must be nonzero");
}

OpExpr exactly_solvable_word(const SolvableParams& p) {
  validate(p);
  Sl2Words j = sl2_words(0);
  return p.a1 * (j.jzero * j.jzero * (j.jminus + OpExpr::scalar(p.delta.inverse()))) +
         p.a2 * (j.jzero * j.jminus) + p.a3 * j.jzero + p.a4 * j.jminus +
         OpExpr::scalar(p.a5);
}

Operator build_operator(const SolvableParams& p, const HeisenbergRep& rep) {
  return realize(exactly_solvable_word(p), rep);
}

ThreePointCoefficients three_point_coefficients(const SolvableParams& p) {
  validate(p);
  const Rational d = p.delta;
  const Rational d2 = d * d;
  const Rational d3 = d2 * d;
  Poly a({p.a4 / d, p.a2 / d2, p.a1 / d3});
  Poly minus_b({p.a5 - p.a4 / d, p.a1 / d2 - Rational(2) * p.a2 / d2 + p.a3 / d,
                Rational(-2) * p.a1 / d3});
  Poly c({0, -(p.a1 / d2 - p.a2 / d2 + p.a3 / d), p.a1 / d3});
  return {a, -minus_b, c};
}

ShiftOp explicit_three_point(const SolvableParams& p) {
  ThreePointCoefficients t = three_point_coefficients(p);
  return ShiftOp(p.delta, {{1, t.a}, {0, -t.b}, {-1, t.c}});
}

ThreePointCoefficients split_three_point(const ShiftOp& op) {
  for (int s : op.support())
    if (s < -1 || s > 1) throw Error("operator is not three-point: shift " + std::to_string(s));
  return {op.coeff(1), -op.coeff(0), op.coeff(-1)};
}

std::vector<Rational> spectrum(const SolvableParams& p, int kmax) {
  validate(p);
  std::vector<Rational> out;
  for (int k = 0; k <= kmax; ++k) {
    Rational kk(k);
    out.push_back(p.a1 * kk * kk / p.delta + p.a3 * kk + p.a5);
  }
  return out;
}

SpectralResult triangular_eigenpolys(const Operator& op, const HeisenbergRep& rep, int kmax) {
  if (kmax < 0) throw Error("kmax must be non-negative");
  const Basis basis = rep.natural_basis();
  MatrixQ m = matrix_in_basis(op, basis, kmax);
  if (!m.is_upper_triangular()) throw Error("operator raises degree; no triangular solve");
  SpectralResult out{rep, basis, {}};
  for (int k = 0; k <= kmax; ++k) {
    const Rational lambda = m(k, k);
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    c[static_cast<std::size_t>(k)] = 1;
    for (int i = k - 1; i >= 0; --i) {
      Rational s;
      for (int j = i + 1; j <= k; ++j) s += m(i, j) * c[static_cast<std::size_t>(j)];
      Rational pivot = m(i, i) - lambda;
      if (pivot.is_zero()) {
        if (!s.is_zero()) throw DegenerateSpectrum(i, k);
        continue;  // free coordinate, fixed at zero
      }
      c[static_cast<std::size_t>(i)] = -s / pivot;
    }
    out.entries.push_back({k, lambda, change_basis(Poly(std::move(c), basis), Basis::monomial())});
  }
  return out;
}

SpectralResult eigenpolys(const SolvableParams& p, const HeisenbergRep& rep, int kmax) {
  return triangular_eigenpolys(build_operator(p, rep), rep, kmax);
}

DiffOp differential_operator(const SolvableParams& p) {
  validate(p);
  const Rational r = p.a1 / p.delta;
  return DiffOp({Poly::constant(p.a5), Poly({p.a4, r + p.a3}), Poly({0, p.a1 + p.a2, r}),
                 Poly({0, 0, p.a1})});
}

CheckReport isospectral_check(const SolvableParams& p, int kmax) {
  CheckReport out;
  const std::vector<Rational> formula = spectrum(p, kmax);
  MatrixQ shift_m = matrix_in_basis(explicit_three_point(p), Basis::monomial(), kmax);
  MatrixQ diff_m = matrix_in_basis(differential_operator(p), Basis::monomial(), kmax);
  out.add("difference_diagonal_matches_formula", shift_m.diagonal() == formula);
  out.add("differential_diagonal_matches_formula", diff_m.diagonal() == formula);
  out.add("diagonals_agree", shift_m.diagonal() == diff_m.diagonal());
  out.add("differential_closed_form_equals_word",
          build_operator(p, HeisenbergRep::differential()) == Operator(differential_operator(p)));
  return out;
}

CheckReport umbral_transfer_check(const SolvableParams& p, int kmax) {
  SpectralResult cont = eigenpolys(p, HeisenbergRep::differential(), kmax);
  SpectralResult disc = eigenpolys(p, HeisenbergRep::difference(p.delta), kmax);
  const ShiftOp three_point = explicit_three_point(p);
  CheckReport out;
  for (int k = 0; k <= kmax; ++k) {
    const auto& c = cont.entries[static_cast<std::size_t>(k)];
    const auto& d = disc.entries[static_cast<std::size_t>(k)];
    Poly image = umbral_map(c.eigenpoly, p.delta);
    std::string tag = "k=" + std::to_string(k);
    out.add("umbral_image " + tag, image == d.eigenpoly,
            image == d.eigenpoly ? "" : image.str() + " vs " + d.eigenpoly.str());
    out.add("same_lambda " + tag, c.lambda == d.lambda);
    Poly residual = three_point.apply(image) - d.lambda * image;
    out.add("residual_zero " + tag, residual.is_zero(), residual.str());
  }
  return out;
}

bool fock_matrix_invariance(const OpExpr& word, int dmax, const Rational& delta) {
  const int headroom = word.raising_count();
  MatrixQ cont =
      matrix_in_basis(realize(word, HeisenbergRep::differential()), Basis::monomial(), dmax,
                      headroom);
  MatrixQ disc = matrix_in_basis(realize(word, HeisenbergRep::difference(delta)),
                                 Basis::falling(delta), dmax, headroom);
  return cont == disc;
}

bool fock_matrix_invariance(const OpExpr& word, int dmax, std::span<const Rational> deltas) {
  for (const auto& d : deltas)
    if (!fock_matrix_invariance(word, dmax, d)) return false;
  return true;
}

}  // namespace sl2fd
