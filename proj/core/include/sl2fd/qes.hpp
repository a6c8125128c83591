#pragma once

#include <complex>
#include <vector>

#include "sl2fd/solvable.hpp"

namespace sl2fd {

/// Coefficients of the cubic quasi-exactly-solvable element
///   A+ (J+_n + delta J0_n J0_n) + A1 J0_n J0_n (J-_n + 1/delta)
///     + A2 J0_n J-_n + A3 J0_n + A4 J-_n + A5.
struct QesParams {
  Rational aplus, a1, a2, a3, a4, a5;
  Rational delta = 1;
  int n = 0;

  friend bool operator==(const QesParams&, const QesParams&) = default;
};

void validate(const QesParams& qp);

OpExpr qes_word(const QesParams& qp);
Operator build_qes(const QesParams& qp, const HeisenbergRep& rep);

/// Support of the difference realization lies in {-1, 0, +1}.
bool three_point_check(const QesParams& qp);

/// (n+1)x(n+1) matrix on polynomials of degree <= n in the representation's
/// natural basis. Throws InvarianceViolation if an image leaves the subspace.
MatrixQ invariant_block(const QesParams& qp, const HeisenbergRep& rep);
MatrixQ invariant_block(const Operator& op, const HeisenbergRep& rep, int n);

struct QesSpectrum {
  int n = 0;
  Poly charpoly;
  /// Floating-point roots, sorted by (real, imaginary). Display only.
  std::vector<std::complex<double>> roots;
};

QesSpectrum qes_spectrum(const QesParams& qp);

/// Approximate roots of a polynomial with rational coefficients.
std::vector<std::complex<double>> approximate_roots(const Poly& p);

/// Exact equality of the characteristic polynomials of both invariant blocks.
bool qes_isospectral_check(const QesParams& qp);

}  // namespace sl2fd
