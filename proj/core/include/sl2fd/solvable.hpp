#pragma once

#include <vector>

#include "sl2fd/expr.hpp"
#include "sl2fd/matrix.hpp"
#include "sl2fd/report.hpp"

namespace sl2fd {

/// Coefficients of the general exactly-solvable element
///   A1 J0 J0 (J- + 1/delta) + A2 J0 J- + A3 J0 + A4 J- + A5
/// built from the n = 0 generators.
struct SolvableParams {
  Rational a1, a2, a3, a4, a5;
  Rational delta = 1;

  friend bool operator==(const SolvableParams&, const SolvableParams&) = default;
};

/// Throws DivisionByZero if delta is zero.
void validate(const SolvableParams& p);

OpExpr exactly_solvable_word(const SolvableParams& p);

/// Realization of the word. For the difference representation the result is
/// a three-point operator with support in {-1, 0, +1}.
Operator build_operator(const SolvableParams& p, const HeisenbergRep& rep);

/// Coefficient functions of  A(x) f(x+delta) - B(x) f(x) + C(x) f(x-delta).
struct ThreePointCoefficients {
  Poly a;
  Poly b;
  Poly c;
};
ThreePointCoefficients three_point_coefficients(const SolvableParams& p);

/// The same operator assembled directly from the closed-form coefficients:
///   A(x)  = A4/d + (A2/d^2) x + (A1/d^3) x^2
///   -B(x) = A5 - A4/d + (A1/d^2 - 2 A2/d^2 + A3/d) x - (2 A1/d^3) x^2
///   C(x)  = -(A1/d^2 - A2/d^2 + A3/d) x + (A1/d^3) x^2
ShiftOp explicit_three_point(const SolvableParams& p);

/// Reads A, B, C back off a three-point operator (terms E^1, -E^0, E^-1).
ThreePointCoefficients split_three_point(const ShiftOp& op);

/// lambda_k = A1 k^2 / delta + A3 k + A5 for k = 0..kmax.
std::vector<Rational> spectrum(const SolvableParams& p, int kmax);

struct SpectralEntry {
  int k = 0;
  Rational lambda;
  /// Monic, degree k, monomial basis.
  Poly eigenpoly;
};

struct SpectralResult {
  HeisenbergRep rep = HeisenbergRep::differential();
  /// Basis the triangular solve ran in.
  Basis solve_basis = Basis::monomial();
  std::vector<SpectralEntry> entries;
};

/// Monic eigenpolynomials of degree 0..kmax by back-substitution on the
/// (upper-triangular, columns = images) matrix in the representation's
/// natural basis. A zero pivot lambda_i == lambda_k is resolved by setting
/// coordinate i to zero when the row is consistent; otherwise
/// DegenerateSpectrum{i, k} is thrown.
SpectralResult eigenpolys(const SolvableParams& p, const HeisenbergRep& rep, int kmax);

/// Same solve for an arbitrary degree-non-increasing operator.
SpectralResult triangular_eigenpolys(const Operator& op, const HeisenbergRep& rep, int kmax);

/// Closed-form third-order operator
///   A1 x^2 d^3 + [(A1 + A2) + (A1/delta) x] x d^2 + [A4 + (A1/delta + A3) x] d + A5.
DiffOp differential_operator(const SolvableParams& p);

/// Diagonals of the three-point and the third-order operator (monomial basis,
/// 0..kmax) agree with each other and with `spectrum`; the closed-form
/// differential operator equals the differential realization of the word.
CheckReport isospectral_check(const SolvableParams& p, int kmax);

/// For each k <= kmax the umbral image of the differential eigenpolynomial is
/// the difference eigenpolynomial with the same eigenvalue, and its residual
/// under the three-point operator vanishes.
CheckReport umbral_transfer_check(const SolvableParams& p, int kmax);

/// Matrix of the differential realization in monomials equals the matrix of
/// the difference realization (step delta) in delta-falling factorials.
/// Columns 0..dmax, rows with headroom for the raising letters in `word`.
bool fock_matrix_invariance(const OpExpr& word, int dmax, const Rational& delta);
bool fock_matrix_invariance(const OpExpr& word, int dmax, std::span<const Rational> deltas);

}  // namespace sl2fd
