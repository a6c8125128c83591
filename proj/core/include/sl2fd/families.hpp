#pragma once

#include <string>
#include <utility>
#include <variant>

#include "sl2fd/solvable.hpp"

namespace sl2fd {

struct Hahn {
  Rational alpha, beta, N;
};
/// Analytically-continued Hahn; defined through its parameter substitution.
struct HahnTilde {
  Rational mu, nu, N;
};
struct Meixner {
  Rational gamma, mu;
};
struct Charlier {
  Rational mu;
};

using FamilyPreset = std::variant<Hahn, HahnTilde, Meixner, Charlier>;

/// "hahn", "hahn-tilde", "meixner" or "charlier".
std::string family_name(const FamilyPreset& f);

/// All presets use delta = 1, A5 = 0:
///   Hahn       (-1, N-beta-2, -alpha-beta-1, (beta+1)(N-1))
///   HahnTilde  ( 1, 2-2N-nu,  1-2N-mu-nu,    (N+nu-1)(N-1))
///   Meixner    ( 0, -mu,      mu-1,          gamma mu)
///   Charlier   ( 0, 0,        -1,            mu)
SolvableParams preset_params(const FamilyPreset& f);

/// Monic degree-k eigenpolynomial of the preset's three-point operator
/// (difference representation) and its eigenvalue.
std::pair<Poly, Rational> family_polynomial(const FamilyPreset& f, int k);

struct Factorization {
  Poly polynomial;
  Poly quotient;
  Poly remainder;
};

/// Divides the degree-k polynomial (k >= N) by x(x-1)...(x-N+1).
/// Throws NonzeroRemainder if the division is not exact and Error for a
/// non-Hahn preset, non-integer N < 1, or k < N.
Factorization hahn_factorization_full(const FamilyPreset& f, int k);
/// Quotient only.
Poly hahn_factorization(const FamilyPreset& f, int k);

}  // namespace sl2fd
