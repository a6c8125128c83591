#include "doctest.h"
#include "support.hpp"

using namespace sl2fd;
using namespace sl2fd::testing;

namespace {

const Rational one = 1;

ShiftOp b_difference(const Rational& d) { return ShiftOp(d, {{-1, Poly::x()}}); }

}  // namespace

TEST_CASE("shift_apply examples") {
  CHECK(ShiftOp::forward_difference(1).apply(Poly({0, 0, 1})) == Poly({1, 2}));
  Poly p = random_poly(5);
  CHECK(ShiftOp::identity(Rational(2, 3)).apply(p) == p);
  CHECK(b_difference(1).apply(Poly::x()) == Poly({0, -1, 1}));
}

TEST_CASE("shift_apply agrees with pointwise evaluation") {
  for (int i = 0; i < 60; ++i) {
    ShiftOp op = random_shift_op(random_nonzero_rational());
    Poly f = random_poly(i % 9);
    Poly image = op.apply(f);
    for (int t = -2; t <= 2; ++t)
      CHECK(image(Rational(t, 3)) == eval_shift_pointwise(op, f, Rational(t, 3)));
  }
}

TEST_CASE("shift_compose examples") {
  ShiftOp b = b_difference(1);
  ShiftOp bb = b * b;
  CHECK(bb == ShiftOp(1, {{-2, Poly({0, -1, 1})}}));
  for (int k = 0; k <= 3; ++k) CHECK(bb.apply(Poly::term(k)) == b.apply(b.apply(Poly::term(k))));
  CHECK(ShiftOp::shift(1, 1) * ShiftOp::shift(1, -1) == ShiftOp::identity(1));
  ShiftOp dplus = ShiftOp::forward_difference(1);
  CHECK(dplus * b - b * dplus == ShiftOp::identity(1));
  CHECK_THROWS_AS(ShiftOp::shift(1, 1) * ShiftOp::shift(2, 1), DeltaMismatch);
}

TEST_CASE("shift normal form is sound under composition") {
  for (int i = 0; i < 200; ++i) {
    Rational d = random_nonzero_rational();
    ShiftOp l1 = random_shift_op(d), l2 = random_shift_op(d);
    Poly p = random_poly(i % 11);
    CHECK(compose(l1, l2).apply(p) == l1.apply(l2.apply(p)));
  }
}

TEST_CASE("diff_apply examples") {
  DiffOp x2d3({Poly(), Poly(), Poly(), Poly({0, 0, 1})});
  CHECK(x2d3.apply(Poly::term(3)) == Poly::term(2, 6));
  CHECK(DiffOp::derivative().apply(Poly::constant(9)).is_zero());
  DiffOp charlier({Poly(), Poly({2, -1})});
  CHECK(charlier.apply(Poly({-2, 1})) == Poly({2, -1}));
}

TEST_CASE("diff_apply agrees with termwise differentiation") {
  for (int i = 0; i < 40; ++i) {
    DiffOp op = random_diff_op();
    for (int k = 0; k <= 8; ++k) CHECK(op.apply(Poly::term(k)) == diff_apply_oracle(op, k));
  }
}

TEST_CASE("diff_compose examples") {
  DiffOp d = DiffOp::derivative(), x = DiffOp::multiply(Poly::x());
  CHECK(d * x == DiffOp({Poly::constant(1), Poly::x()}));
  DiffOp xd = x * d;
  CHECK(xd * xd == DiffOp({Poly(), Poly::x(), Poly::term(2)}));
  CHECK(d * d == DiffOp::derivative(2));
}

TEST_CASE("diff normal form is sound under composition") {
  for (int i = 0; i < 200; ++i) {
    DiffOp d1 = random_diff_op(), d2 = random_diff_op();
    Poly p = random_poly(i % 11);
    CHECK(compose(d1, d2).apply(p) == d1.apply(d2.apply(p)));
  }
}

TEST_CASE("commutator") {
  Operator d = DiffOp::derivative(), x = DiffOp::multiply(Poly::x());
  CHECK(commutator(d, x) == Operator(DiffOp::identity()));
  Operator s = random_shift_op(Rational(1, 3));
  CHECK(commutator(s, s).is_zero());
  Rational h(1, 2);
  ShiftOp bq = ShiftOp::multiply(h, Poly::x()) *
               (ShiftOp::identity(h) - h * ShiftOp::backward_difference(h));
  CHECK(commutator(ShiftOp::forward_difference(h), bq) == ShiftOp::identity(h));
  CHECK_THROWS_AS(commutator(d, s), KindMismatch);
  CHECK_THROWS_AS(commutator(ShiftOp::shift(1, 1), ShiftOp::shift(3, 1)), DeltaMismatch);
}

TEST_CASE("delta reflection: D+ at -delta is D- at delta") {
  for (const auto& d : test_deltas())
    CHECK(ShiftOp::forward_difference(-d) == ShiftOp::backward_difference(d));
  CHECK_FALSE(ShiftOp::forward_difference(1) == ShiftOp::backward_difference(1));
}

TEST_CASE("realize examples") {
  Operator b = realize(OpExpr::gen_b(), HeisenbergRep::differential());
  CHECK(b == Operator(DiffOp::multiply(Poly::x())));
  OpExpr ab = OpExpr::gen_a() * OpExpr::gen_b() - OpExpr::gen_b() * OpExpr::gen_a();
  CHECK(realize(ab, HeisenbergRep::differential()) == Operator(DiffOp::identity()));
  CHECK(realize(ab, HeisenbergRep::difference(Rational(-2, 3))) ==
        Operator(ShiftOp::identity(Rational(-2, 3))));
  Operator bb = realize(OpExpr::gen_b() * OpExpr::gen_b(), HeisenbergRep::difference(1));
  CHECK(bb.apply(Poly::constant(1)) == Poly({0, -1, 1}));
}

TEST_CASE("realize is a ring homomorphism") {
  std::vector<HeisenbergRep> reps = {HeisenbergRep::differential(), HeisenbergRep::difference(1),
                                     HeisenbergRep::difference(Rational(-2, 3))};
  for (int i = 0; i < 50; ++i) {
    OpExpr x = random_word(3), y = random_word(3);
    Rational c = random_rational();
    for (const auto& rep : reps) {
      Operator rx = realize(x, rep), ry = realize(y, rep);
      Operator prod = realize(x * y, rep);
      Operator sum = realize(x + c * y, rep);
      for (int k = 0; k <= 12; ++k) {
        Poly m = Poly::term(k);
        CHECK(prod.apply(m) == rx.apply(ry.apply(m)));
        CHECK(sum.apply(m) == rx.apply(m) + c * ry.apply(m));
      }
    }
  }
}

TEST_CASE("matrix_in_basis examples") {
  Operator j0 = ShiftOp(1, {{0, Poly::x()}, {-1, -Poly::x()}});
  CHECK(matrix_in_basis(j0, Basis::monomial(), 2) ==
        MatrixQ::from_rows({{0, 0, 0}, {0, 1, -1}, {0, 0, 2}}));
  CHECK(matrix_in_basis(Operator(DiffOp()), Basis::falling(2), 4).is_zero());
  CHECK(matrix_in_basis(Operator(DiffOp::derivative()), Basis::monomial(), 2) ==
        MatrixQ::from_rows({{0, 1, 0}, {0, 0, 2}, {0, 0, 0}}));
}

TEST_CASE("matrix_in_basis reports truncation escape") {
  Operator x = DiffOp::multiply(Poly::x());
  try {
    matrix_in_basis(x, Basis::monomial(), 3);
    FAIL("expected ImageEscapesTruncation");
  } catch (const ImageEscapesTruncation& e) {
    CHECK(e.column == 3);
    CHECK(e.needed_degree == 4);
  }
  CHECK(matrix_in_basis(x, Basis::monomial(), 3, 1).rows() == 5);
}

TEST_CASE("matrix functoriality") {
  for (int i = 0; i < 40; ++i) {
    Rational d = random_nonzero_rational();
    // degree-non-increasing pieces keep every truncation exact
    ShiftOp l1 = ShiftOp::forward_difference(d) * random_shift_op(d, 2, 1) +
                 random_shift_op(d, 2, 0);
    ShiftOp l2 = ShiftOp::multiply(d, random_poly(1)) * ShiftOp::forward_difference(d);
    Basis basis = i % 2 ? Basis::monomial() : Basis::falling(d);
    MatrixQ m12 = matrix_in_basis(Operator(l1 * l2), basis, 8);
    CHECK(m12 == matrix_in_basis(Operator(l1), basis, 8) * matrix_in_basis(Operator(l2), basis, 8));
  }
}

TEST_CASE("shift_support") {
  CHECK(shift_support(ShiftOp::forward_difference(1)) == std::set<int>{0, 1});
  CHECK(shift_support(ShiftOp::identity(3)) == std::set<int>{0});
  SolvableParams p{Rational(-3, 2), Rational(2), Rational(1, 3), Rational(4), Rational(7), 1};
  CHECK(shift_support(explicit_three_point(p)) == std::set<int>{-1, 0, 1});
}

TEST_CASE("operator JSON round trip") {
  ShiftOp s = random_shift_op(Rational(-1, 2));
  CHECK(io::shift_op_from_json(io::to_json(s)) == s);
  DiffOp d = random_diff_op();
  CHECK(io::diff_op_from_json(io::to_json(d)) == d);
  CHECK(io::to_json(ShiftOp(1, {{-1, Poly::x()}})).dump() ==
        R"({"delta":"1","terms":[{"shift":-1,"coeff":["0","1"]}]})");
  CHECK(io::to_json(DiffOp::multiply(Poly::x())).dump() == R"({"coeffs":[["0","1"]]})");
  MatrixQ m = MatrixQ::from_rows({{Rational(-1, 4), 0}, {-1, Rational(3, 4)}});
  CHECK(io::to_json(m).dump() == R"([["-1/4","0"],["-1","3/4"]])");
  CHECK(io::matrix_from_json(io::to_json(m)) == m);
  Poly p({1, Rational(-2, 3)}, Basis::falling(Rational(1, 2)));
  CHECK(io::to_json(p).dump() == R"({"basis":"falling","delta":"1/2","coeffs":["1","-2/3"]})");
  CHECK(io::poly_from_json(io::to_json(p)) == p);
  CHECK_THROWS_AS(io::poly_from_json(io::Json::parse(R"({"basis":"weird","coeffs":[]})")),
                  ParseError);
}
