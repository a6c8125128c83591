#pragma once
// Random generators and independent oracles shared by the test binaries.
// Nothing here routes through the library's shift/compose/basis-change code.

#include <random>
#include <vector>

#include "sl2fd/json_io.hpp"
#include "sl2fd/sl2fd.hpp"

namespace sl2fd::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);
  return gen;
}

inline Rational random_rational(int max_num = 9, int max_den = 5) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng()), den(rng()));
}

inline Rational random_nonzero_rational(int max_num = 9, int max_den = 5) {
  for (;;) {
    Rational r = random_rational(max_num, max_den);
    if (!r.is_zero()) return r;
  }
}

inline Poly random_poly(int degree) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rational());
  if (degree >= 0) c.back() = random_nonzero_rational();
  return Poly(std::move(c));
}

inline const std::vector<Rational>& test_deltas() {
  static const std::vector<Rational> d = {Rational(1), Rational(1, 2), Rational(-2, 3),
                                          Rational(5)};
  return d;
}

inline SolvableParams random_solvable(const Rational& delta) {
  return {random_rational(), random_rational(), random_rational(), random_rational(),
          random_rational(), delta};
}

inline SolvableParams random_solvable() { return random_solvable(random_nonzero_rational(4, 3)); }

inline QesParams random_qes(int n, const Rational& delta) {
  return {random_rational(), random_rational(), random_rational(), random_rational(),
          random_rational(), random_rational(), delta, n};
}

inline ShiftOp random_shift_op(const Rational& delta, int max_shift = 2, int max_deg = 2) {
  std::uniform_int_distribution<int> s(-max_shift, max_shift);
  std::uniform_int_distribution<int> d(0, max_deg);
  std::uniform_int_distribution<int> count(1, 3);
  ShiftOp::Terms t;
  for (int i = count(rng()); i > 0; --i) t[s(rng())] += random_poly(d(rng()));
  return ShiftOp(delta, std::move(t));
}

inline DiffOp random_diff_op(int max_order = 3, int max_deg = 2) {
  std::uniform_int_distribution<int> o(0, max_order);
  std::uniform_int_distribution<int> d(0, max_deg);
  std::vector<Poly> c(static_cast<std::size_t>(o(rng())) + 1);
  for (auto& p : c) p = random_poly(d(rng()));
  return DiffOp(std::move(c));
}

/// Random word in a, b, scalars with at most `max_letters` generator letters.
inline OpExpr random_word(int max_letters) {
  std::uniform_int_distribution<int> len(1, max_letters);
  std::uniform_int_distribution<int> coin(0, 3);
  const int n = len(rng());
  OpExpr w = OpExpr::scalar(random_nonzero_rational());
  int used = 0;
  while (used < n) {
    int c = coin(rng());
    if (c == 0 && used + 1 < n) {
      // sum of two letters at the same position
      OpExpr s = (coin(rng()) & 1 ? OpExpr::gen_a() : OpExpr::gen_b()) +
                 random_nonzero_rational() * OpExpr::gen_a();
      w = w * s;
    } else if (c == 1) {
      w = w * OpExpr::gen_a();
    } else if (c == 2) {
      w = w * OpExpr::gen_b();
    } else {
      w = w * (OpExpr::gen_b() + OpExpr::scalar(random_rational()));
    }
    ++used;
  }
  return w;
}

// ---------------------------------------------------------------- oracles

/// Coefficients of prod (x - r_i), naive convolution on plain vectors.
inline std::vector<Rational> expand_roots(const std::vector<Rational>& roots) {
  std::vector<Rational> c{Rational(1)};
  for (const auto& r : roots) {
    std::vector<Rational> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

/// Monomial-basis evaluation of a plain coefficient list.
inline Rational eval_coeffs(const std::vector<Rational>& c, const Rational& x) {
  Rational acc;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

/// Stirling numbers of the second kind by the triangle recurrence.
inline Rational stirling2(int n, int k) {
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(n) + 1,
                                       std::vector<Rational>(static_cast<std::size_t>(n) + 1));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      s[i][j] = Rational(j) * s[i - 1][j] + s[i - 1][j - 1];
  return (k < 0 || k > n) ? Rational(0) : s[n][k];
}

/// (L f)(x0) = sum_s p_s(x0) f(x0 + s delta), pointwise.
inline Rational eval_shift_pointwise(const ShiftOp& op, const Poly& f, const Rational& x0) {
  Rational acc;
  for (const auto& [s, p] : op.terms()) acc += p(x0) * f(x0 + op.delta() * Rational(s));
  return acc;
}

/// Coefficient list of d^j/dx^j x^k applied termwise, no library derivative.
inline Poly diff_apply_oracle(const DiffOp& op, int k) {
  std::vector<Rational> out;
  for (int j = 0; j <= op.order() && j <= k; ++j) {
    Rational fall = 1;
    for (int i = 0; i < j; ++i) fall *= Rational(k - i);
    const Poly& q = op.coeffs()[static_cast<std::size_t>(j)];
    for (int i = 0; i <= q.degree(); ++i) {
      auto idx = static_cast<std::size_t>(i + k - j);
      if (out.size() <= idx) out.resize(idx + 1);
      out[idx] += q.coeff(i) * fall;
    }
  }
  return Poly(std::move(out));
}

inline std::vector<Rational> rats(std::initializer_list<Rational> v) { return v; }

}  // namespace sl2fd::testing
