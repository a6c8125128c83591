#include "sl2fd/qes.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "sl2fd/errors.hpp"
#include "sl2fd/sl2.hpp"

namespace sl2fd {

void validate(const QesParams& qp) {
  if (qp.delta.is_zero()) throw DivisionByZero("delta must be nonzero");
  if (qp.n < 0) throw Error("n must be non-negative");
}

OpExpr qes_word(const QesParams& qp) {
  validate(qp);
  Sl2Words j = sl2_words(qp.n);
  return qp.aplus * (j.jplus + qp.delta * (j.jzero * j.jzero)) +
         qp.a1 * (j.jzero * j.jzero * (j.jminus + OpExpr::scalar(qp.delta.inverse()))) +
         qp.a2 * (j.jzero * j.jminus) + qp.a3 * j.jzero + qp.a4 * j.jminus +
         OpExpr::scalar(qp.a5);
}

Operator build_qes(const QesParams& qp, const HeisenbergRep& rep) {
  return realize(qes_word(qp), rep);
}

bool three_point_check(const QesParams& qp) {
  Operator op = build_qes(qp, HeisenbergRep::difference(qp.delta));
  for (int s : op.as_shift().support())
    if (s < -1 || s > 1) return false;
  return true;
}

MatrixQ invariant_block(const Operator& op, const HeisenbergRep& rep, int n) {
  try {
    return matrix_in_basis(op, rep.natural_basis(), n);
  } catch (const ImageEscapesTruncation& e) {
    throw InvarianceViolation(e.column);
  }
}

MatrixQ invariant_block(const QesParams& qp, const HeisenbergRep& rep) {
  return invariant_block(build_qes(qp, rep), rep, qp.n);
}

namespace {

using cld = std::complex<long double>;

cld horner(const std::vector<long double>& c, cld z) {
  cld acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

double tidy(long double v, long double scale) {
  // Snap to 12 significant digits relative to the root scale so output is stable.
  long double unit = std::pow(10.0L, std::floor(std::log10(std::max(scale, 1e-300L))) - 11);
  long double r = std::round(v / unit) * unit;
  double d = static_cast<double>(r);
  return d == 0.0 ? 0.0 : d;
}

}  // namespace

std::vector<std::complex<double>> approximate_roots(const Poly& p) {
  Poly mono = change_basis(p, Basis::monomial());
  const int deg = mono.degree();
  if (deg < 1) return {};
  std::vector<long double> c;
  const Rational lead = mono.leading();
  for (int i = 0; i <= deg; ++i) c.push_back(static_cast<long double>((mono.coeff(i) / lead).to_double()));
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -static_cast<double>(c[static_cast<std::size_t>(i)]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<long double> dc;
  for (int i = 1; i <= deg; ++i) dc.push_back(c[static_cast<std::size_t>(i)] * i);
  long double scale = 1;
  std::vector<cld> roots;
  for (int i = 0; i < deg; ++i) {
    cld z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int it = 0; it < 8; ++it) {
      cld d = horner(dc, z);
      if (std::abs(d) == 0) break;
      cld step = horner(c, z) / d;
      z -= step;
      if (std::abs(step) <= 1e-18L * std::max<long double>(1, std::abs(z))) break;
    }
    roots.push_back(z);
    scale = std::max(scale, std::abs(z));
  }
  std::vector<std::complex<double>> out;
  for (const auto& z : roots) out.emplace_back(tidy(z.real(), scale), tidy(z.imag(), scale));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return out;
}

QesSpectrum qes_spectrum(const QesParams& qp) {
  MatrixQ block = invariant_block(qp, HeisenbergRep::difference(qp.delta));
  Poly cp = char_poly(block);
  return {qp.n, cp, approximate_roots(cp)};
}

bool qes_isospectral_check(const QesParams& qp) {
  Poly cont = char_poly(invariant_block(qp, HeisenbergRep::differential()));
  Poly disc = char_poly(invariant_block(qp, HeisenbergRep::difference(qp.delta)));
  return cont == disc;
}

}  // namespace sl2fd
