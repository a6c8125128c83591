#include "doctest.h"
#include "support.hpp"

using namespace sl2fd;
using namespace sl2fd::testing;

TEST_CASE("heisenberg_pair") {
  auto [a, b] = heisenberg_pair(HeisenbergRep::differential());
  CHECK(a == Operator(DiffOp::derivative()));
  CHECK(b == Operator(DiffOp::multiply(Poly::x())));
  auto diff = heisenberg_pair(HeisenbergRep::difference(1));
  CHECK(diff.b.apply(Poly::constant(1)) == Poly::x());
  CHECK(diff.b.apply(diff.b.apply(Poly::constant(1))) == Poly({0, -1, 1}));
  CHECK(diff.b == Operator(ShiftOp(1, {{-1, Poly::x()}})));
  CHECK(commutator(diff.a, diff.b) == Operator(ShiftOp::identity(1)));
  CHECK_THROWS_AS(HeisenbergRep::difference(0), DivisionByZero);
}

TEST_CASE("b^n applied to the vacuum is the falling factorial") {
  for (const auto& d : test_deltas()) {
    auto pair = heisenberg_pair(HeisenbergRep::difference(d));
    Poly v = Poly::constant(1);
    for (int k = 0; k <= 10; ++k) {
      CHECK(v == falling_factorial(k, d));
      v = pair.b.apply(v);
    }
    CHECK(pair.a.apply(Poly::constant(1)).is_zero());
  }
}

TEST_CASE("sl2_generators examples") {
  Sl2Triple t = sl2_generators(0, HeisenbergRep::differential());
  CHECK(t.jzero == Operator(DiffOp({Poly(), Poly::x()})));
  for (int k = 0; k <= 5; ++k) CHECK(t.jzero.apply(Poly::term(k)) == Poly::term(k, k));

  Sl2Triple td = sl2_generators(0, HeisenbergRep::difference(1));
  CHECK(matrix_in_basis(td.jzero, Basis::monomial(), 2).diagonal() == rats({0, 1, 2}));

  Sl2Triple t2 = sl2_generators(2, HeisenbergRep::differential());
  CHECK(t2.jplus.apply(Poly::term(2)).is_zero());
}

TEST_CASE("explicit difference generators") {
  for (const auto& d : test_deltas()) {
    Sl2Triple e = explicit_difference_generators(d);
    CHECK(e.jminus.as_shift().support() == std::set<int>{0, 1});
    CHECK(e.jzero.as_shift().support() == std::set<int>{-1, 0});
    CHECK(e.jplus.as_shift().support() == std::set<int>{-2, -1});
    CHECK(e.jzero.apply(Poly::constant(1)).is_zero());
    CHECK(explicit_generators_match(d));
  }
}

TEST_CASE("verify_relations examples") {
  CHECK(verify_relations(0, HeisenbergRep::differential(), 20).report.passed());
  auto r = verify_relations(3, HeisenbergRep::difference(Rational(-2, 3)), 20);
  CHECK(r.report.passed());
  CHECK(r.report.checks.size() == 4);
  CHECK_THROWS(verify_relations(5, HeisenbergRep::differential(), 7));
}

TEST_CASE("negative control: dropping -n b from J+ breaks [J+, J-] = -2 J0") {
  for (const auto& rep : {HeisenbergRep::differential(), HeisenbergRep::difference(1)}) {
    Sl2Triple t = sl2_generators(1, rep);
    OpExpr a = OpExpr::gen_a(), b = OpExpr::gen_b();
    t.jplus = realize(b * b * a, rep);
    CheckReport r = verify_triple(heisenberg_pair(rep), t, 10);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.find("jplus_jminus")->pass);
    CHECK(r.find("heisenberg")->pass);
  }
}

TEST_CASE("relations for all small n, both representations, test deltas") {
  for (int n = 0; n <= 6; ++n) {
    CHECK(verify_relations(n, HeisenbergRep::differential(), 30).report.passed());
    for (const auto& d : test_deltas())
      CHECK(verify_relations(n, HeisenbergRep::difference(d), 30).report.passed());
  }
}

TEST_CASE("highest-weight property: J+_n kills the top basis vector and raises the rest") {
  std::vector<HeisenbergRep> reps = {HeisenbergRep::differential()};
  for (const auto& d : test_deltas()) reps.push_back(HeisenbergRep::difference(d));
  for (const auto& rep : reps) {
    const Basis basis = rep.natural_basis();
    for (int n = 0; n <= 6; ++n) {
      Sl2Triple t = sl2_generators(n, rep);
      for (int k = 0; k <= n; ++k) {
        std::vector<Rational> unit(static_cast<std::size_t>(k) + 1);
        unit.back() = 1;
        Poly image = t.jplus.apply(Poly(unit, basis));
        if (k == n)
          CHECK(image.is_zero());
        else
          CHECK(image.degree() == k + 1);
      }
    }
  }
}

TEST_CASE("annihilator_check") {
  CHECK(annihilator_check(rats({1}), 1, HeisenbergRep::differential(), 1));
  CHECK(annihilator_check(rats({1, 1}), 2, HeisenbergRep::difference(1), 2));
  CHECK(annihilator_check(rats({1}), 0, HeisenbergRep::difference(1), 0));
  // scope: a^1 does not kill degree 1
  Operator a = realize(OpExpr::gen_a(), HeisenbergRep::difference(1));
  CHECK(a.apply(Poly::x()) == Poly::constant(1));
  for (int n = 0; n <= 4; ++n)
    for (const auto& d : test_deltas())
      CHECK(annihilator_check(rats({random_rational(), random_rational(), random_rational()}), n,
                              HeisenbergRep::difference(d), n));
  CHECK_THROWS(annihilator_check(rats({1}), 3, HeisenbergRep::differential(), 2));
}

TEST_CASE("relation report JSON") {
  auto r = verify_relations(0, HeisenbergRep::difference(Rational(1, 2)), 5);
  CHECK(io::to_json(r).dump() ==
        R"({"checks":[{"name":"heisenberg","pass":true},{"name":"j0_jplus","pass":true},)"
        R"({"name":"j0_jminus","pass":true},{"name":"jplus_jminus","pass":true}],)"
        R"("n":0,"rep":"difference","delta":"1/2"})");
}
