#include "doctest.h"
#include "support.hpp"

using namespace sl2fd;
using namespace sl2fd::testing;

namespace {

bool same(const SolvableParams& p, std::initializer_list<Rational> a) {
  std::vector<Rational> v(a);
  return p.a1 == v[0] && p.a2 == v[1] && p.a3 == v[2] && p.a4 == v[3] && p.a5 == v[4] &&
         p.delta == Rational(1);
}

}  // namespace

TEST_CASE("preset_params") {
  CHECK(same(preset_params(Hahn{0, 0, 3}), {-1, 1, -1, 2, 0}));
  const Rational mu(7, 3);
  CHECK(same(preset_params(Charlier{mu}), {0, 0, -1, mu, 0}));
  CHECK(same(preset_params(HahnTilde{0, 0, 2}), {1, -2, -3, 1, 0}));
  CHECK(same(preset_params(Meixner{2, Rational(1, 2)}), {0, Rational(-1, 2), Rational(-1, 2), 1, 0}));
  CHECK(family_name(HahnTilde{0, 0, 2}) == "hahn-tilde");
}

TEST_CASE("family_polynomial") {
  auto [p, lambda] = family_polynomial(Charlier{2}, 1);
  CHECK(p == Poly({-2, 1}));
  CHECK(lambda == Rational(-1));
  for (FamilyPreset f : {FamilyPreset(Hahn{1, Rational(1, 2), 4}), FamilyPreset(HahnTilde{1, 0, 3}),
                         FamilyPreset(Meixner{Rational(2, 3), Rational(1, 5)}),
                         FamilyPreset(Charlier{Rational(-3, 2)})}) {
    auto [p0, l0] = family_polynomial(f, 0);
    CHECK(p0 == Poly::constant(1));
    CHECK(l0 == Rational(0));
  }
  auto [h2, l2] = family_polynomial(Hahn{0, 0, 3}, 2);
  CHECK(l2 == Rational(-6));
  CHECK(h2 == Poly({Rational(1, 3), -2, 1}));
  ShiftOp op = explicit_three_point(preset_params(Hahn{0, 0, 3}));
  for (int x = 0; x <= 10; ++x)
    CHECK(eval_shift_pointwise(op, h2, x) == l2 * h2(x));
}

TEST_CASE("Meixner eigenpolynomial") {
  auto [p, lambda] = family_polynomial(Meixner{1, Rational(1, 2)}, 2);
  CHECK(p == Poly({0, -1, 1}));
  CHECK(lambda == Rational(-1));
}

TEST_CASE("eigenvalue specializations") {
  const std::vector<Rational> vals = {0, 1, Rational(1, 2), Rational(-1, 3), 3};
  for (const auto& a : vals)
    for (const auto& b : vals) {
      const Rational N = a + 4;
      auto h = spectrum(preset_params(Hahn{a, b, N}), 8);
      auto t = spectrum(preset_params(HahnTilde{a, b, N}), 8);
      auto m = spectrum(preset_params(Meixner{a, b}), 8);
      auto c = spectrum(preset_params(Charlier{a}), 8);
      for (int k = 0; k <= 8; ++k) {
        Rational kk(k);
        auto i = static_cast<std::size_t>(k);
        CHECK(h[i] == -kk * (kk + a + b + 1));
        CHECK(t[i] == kk * kk + (1 - 2 * N - a - b) * kk);
        CHECK(m[i] == (b - 1) * kk);
        CHECK(c[i] == -kk);
      }
    }
}

TEST_CASE("Charlier three-point coefficients") {
  for (int i = 0; i < 10; ++i) {
    Rational mu = random_rational();
    auto t = three_point_coefficients(preset_params(Charlier{mu}));
    CHECK(t.a == Poly::constant(mu));
    CHECK(t.b == Poly({mu, 1}));
    CHECK(t.c == Poly::x());
  }
}

TEST_CASE("discrete-argument eigen-relation on the grid") {
  for (int N = 2; N <= 6; ++N) {
    Hahn h{Rational(1, 2), 1, N};
    ShiftOp op = explicit_three_point(preset_params(h));
    for (int k = 0; k <= N + 2; ++k) {
      auto [p, lambda] = family_polynomial(h, k);
      for (int x = 0; x < N; ++x) CHECK(eval_shift_pointwise(op, p, x) == lambda * p(x));
    }
  }
}

TEST_CASE("hahn_factorization examples") {
  CHECK(hahn_factorization(Hahn{0, 0, 3}, 3) == Poly::constant(1));
  Poly q = hahn_factorization(Hahn{0, 0, 2}, 3);
  CHECK(q == Poly({Rational(-1, 2), 1}));
  CHECK(hahn_factorization(HahnTilde{0, 0, 2}, 2) == Poly::constant(1));
  CHECK(hahn_factorization(Hahn{1, Rational(1, 2), 4}, 5) == Poly({Rational(-37, 23), 1}));
}

TEST_CASE("hahn_factorization over the parameter grid") {
  const std::vector<Rational> ab = {0, 1, Rational(1, 2)};
  for (int N = 2; N <= 5; ++N) {
    for (int k = N; k <= N + 3; ++k) {
      for (const auto& a : ab)
        for (const auto& b : ab) {
          Factorization f = hahn_factorization_full(Hahn{a, b, N}, k);
          CHECK(f.remainder.is_zero());
          CHECK(f.quotient.degree() == k - N);
          CHECK(f.quotient.is_monic());
        }
      for (int mu = 0; mu <= 1; ++mu)
        for (int nu = 0; nu <= 1; ++nu) {
          HahnTilde t{mu, nu, N};
          Factorization f = hahn_factorization_full(t, k);
          CHECK(f.remainder.is_zero());
          CHECK(f.quotient.degree() == k - N);
          ShiftOp op = explicit_three_point(preset_params(t));
          Rational lambda = spectrum(preset_params(t), k).back();
          CHECK((op.apply(f.polynomial) - lambda * f.polynomial).is_zero());
        }
    }
  }
}

TEST_CASE("hahn_factorization preconditions") {
  CHECK_THROWS(hahn_factorization(Charlier{1}, 3));
  CHECK_THROWS(hahn_factorization(Hahn{0, 0, Rational(5, 2)}, 4));
  CHECK_THROWS(hahn_factorization(Hahn{0, 0, 0}, 4));
  CHECK_THROWS(hahn_factorization(Hahn{0, 0, 4}, 3));
}

TEST_CASE("lower Hahn polynomials are not divisible by x^(N)") {
  // only k >= N carries the factor; below that the degree forbids it
  auto [p, lambda] = family_polynomial(Hahn{0, 0, 3}, 2);
  CHECK_FALSE(poly_divrem(p, falling_factorial(2, 1)).remainder.is_zero());
}
