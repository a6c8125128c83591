#include "sl2fd/families.hpp"

#include "sl2fd/errors.hpp"

namespace sl2fd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string family_name(const FamilyPreset& f) {
  return std::visit(overloaded{[](const Hahn&) { return std::string("hahn"); },
                               [](const HahnTilde&) { return std::string("hahn-tilde"); },
                               [](const Meixner&) { return std::string("meixner"); },
                               [](const Charlier&) { return std::string("charlier"); }},
                    f);
}

SolvableParams preset_params(const FamilyPreset& f) {
  const Rational one = 1, two = 2;
  return std::visit(
      overloaded{
          [&](const Hahn& h) {
            return SolvableParams{-one, h.N - h.beta - two, -h.alpha - h.beta - one,
                                  (h.beta + one) * (h.N - one), 0, 1};
          },
          [&](const HahnTilde& h) {
            return SolvableParams{one, two - two * h.N - h.nu, one - two * h.N - h.mu - h.nu,
                                  (h.N + h.nu - one) * (h.N - one), 0, 1};
          },
          [&](const Meixner& m) {
            return SolvableParams{0, -m.mu, m.mu - one, m.gamma * m.mu, 0, 1};
          },
          [&](const Charlier& c) { return SolvableParams{0, 0, -one, c.mu, 0, 1}; }},
      f);
}

std::pair<Poly, Rational> family_polynomial(const FamilyPreset& f, int k) {
  if (k < 0) throw Error("degree must be non-negative");
  SpectralResult r = eigenpolys(preset_params(f), HeisenbergRep::difference(1), k);
  auto& e = r.entries.back();
  return {e.eigenpoly, e.lambda};
}

Factorization hahn_factorization_full(const FamilyPreset& f, int k) {
  Rational n_param;
  if (const auto* h = std::get_if<Hahn>(&f))
    n_param = h->N;
  else if (const auto* t = std::get_if<HahnTilde>(&f))
    n_param = t->N;
  else
    throw Error("factorization applies to the hahn and hahn-tilde families only");
  if (!n_param.is_integer() || n_param < Rational(1))
    throw Error("N must be a positive integer, got " + n_param.str());
  const int n = static_cast<int>(n_param.to_long());
  if (k < n) throw Error("factorization needs k >= N");
  Poly h = family_polynomial(f, k).first;
  DivRem qr = poly_divrem(h, falling_factorial(n, 1));
  if (!qr.remainder.is_zero())
    throw NonzeroRemainder("x^(" + std::to_string(n) + ") does not divide " + h.str() +
                           "; remainder " + qr.remainder.str());
  return {h, qr.quotient, qr.remainder};
}

Poly hahn_factorization(const FamilyPreset& f, int k) {
  return hahn_factorization_full(f, k).quotient;
}

}  // namespace sl2fd
