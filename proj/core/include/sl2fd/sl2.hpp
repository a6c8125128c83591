#pragma once

#include <span>

#include "sl2fd/expr.hpp"
#include "sl2fd/report.hpp"

namespace sl2fd {

/// Abstract words of the spin-n/2 generators:
///   J+ = b^2 a - n b,   J0 = b a - n/2,   J- = a.
struct Sl2Words {
  OpExpr jplus;
  OpExpr jzero;
  OpExpr jminus;
};
Sl2Words sl2_words(int n);

/// Realized generators. They preserve polynomials of degree <= n.
struct Sl2Triple {
  Operator jplus;
  Operator jzero;
  Operator jminus;
  int n = 0;
  HeisenbergRep rep = HeisenbergRep::differential();
};

Sl2Triple sl2_generators(int n, const HeisenbergRep& rep);

/// Closed-form finite-difference generators (n = 0):
///   J+ = x(x/delta - 1) E^-1 (1 - E^-1)
///   J0 = (x/delta)(1 - E^-1)
///   J- = (E - 1)/delta
Sl2Triple explicit_difference_generators(const Rational& delta);

/// Checks [a,b] = 1, [J0,J+] = J+, [J0,J-] = -J-, [J+,J-] = -2 J0 by applying
/// both sides to every monomial of degree <= dmax. Requires dmax >= n + 3.
struct RelationReport {
  CheckReport report;
  int n = 0;
  HeisenbergRep rep = HeisenbergRep::differential();
};
RelationReport verify_relations(int n, const HeisenbergRep& rep, int dmax);

/// Same relation checks for an arbitrary triple (used for negative controls).
CheckReport verify_triple(const HeisenbergPair& pair, const Sl2Triple& triple, int dmax);

/// True iff B(b) a^(n+1) sends every polynomial of degree <= n to zero.
/// `b_coeffs[i]` multiplies b^i. Requires dmax >= n.
bool annihilator_check(std::span<const Rational> b_coeffs, int n, const HeisenbergRep& rep,
                       int dmax);

/// Structural comparison of the closed-form difference generators with the
/// n = 0 word construction.
bool explicit_generators_match(const Rational& delta);

/// D+ built with step -delta equals D- built with step delta.
bool delta_reflection_holds(const Rational& delta);

}  // namespace sl2fd
