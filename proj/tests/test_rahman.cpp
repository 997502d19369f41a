#include <doctest.h>

#include <stdexcept>

#include "rahman/errors.hpp"
#include "rahman/lattice.hpp"
#include "rahman/polymodule.hpp"
#include "rahman/rahman_poly.hpp"
#include "support.hpp"

using rahman::ArgumentPair;
using rahman::Basis;
using rahman::Poly3;
using rahman::Rational;

TEST_CASE("spot values") {
  const auto d = rahman::derive(testing::P1235());
  CHECK(rahman::eval_P(1, 0, 1, 0, d, 1) == Rational(-1, 11));
  CHECK(rahman::eval_P(1, 0, 1, 0, d, 1) == Rational(1) - d.t);
  CHECK(rahman::eval_P(1, 0, 0, 0, d, 1) == Rational(1));
  CHECK_THROWS_AS(rahman::eval_P(-1, 0, 0, 0, d, 1), std::out_of_range);
}

TEST_CASE("P is 1 when either argument pair vanishes") {
  for (const auto& p : testing::sample_sets()) {
    const auto d = rahman::derive(p);
    for (int N = 0; N <= 5; ++N)
      for (const auto& m : rahman::lattice(N)) {
        CHECK(rahman::eval_P(0, 0, m.s, m.t, d, N) == Rational(1));
        CHECK(rahman::eval_P(m.s, m.t, 0, 0, d, N) == Rational(1));
      }
  }
}

TEST_CASE("eval_P agrees with the brute-force sum on random sets") {
  for (const auto& p : testing::random_sets(6, 31)) {
    const auto d = rahman::derive(p);
    const auto tuvw = testing::tuvw_of(p);
    for (int N = 0; N <= 4; ++N) {
      const rahman::RahmanTable table(d, N);
      for (const auto& a : rahman::lattice(N))
        for (const auto& c : rahman::lattice(N)) {
          const Rational expected = testing::brute_P(a.s, a.t, c.s, c.t, tuvw, N);
          CHECK(rahman::eval_P(a.s, a.t, c.s, c.t, d, N) == expected);
          CHECK(table.at(a.s, a.t, c.s, c.t) == expected);
        }
    }
  }
}

TEST_CASE("table bounds") {
  const rahman::RahmanTable table(rahman::derive(testing::P1235()), 2);
  CHECK(rahman::RahmanTable::in_range(1, 1, 2));
  CHECK_FALSE(rahman::RahmanTable::in_range(2, 1, 2));
  CHECK_FALSE(rahman::RahmanTable::in_range(-1, 0, 2));
  CHECK_THROWS_AS(table.at(2, 1, 0, 0), std::out_of_range);
}

TEST_CASE("bivariate form") {
  const auto d = rahman::derive(testing::P1235());
  const auto one = rahman::as_bivariate(0, 0, d, 3, ArgumentPair::cd);
  CHECK(one.total_degree() == 0);
  CHECK(one.coeff(0, 0) == Rational(1));
  for (int N = 1; N <= 4; ++N) {
    const auto lin = rahman::as_bivariate(1, 0, d, N, ArgumentPair::cd);
    CHECK(lin.total_degree() == 1);
    CHECK(lin.coeff(0, 0) == Rational(1));
    CHECK(lin.coeff(1, 0) == -d.t / Rational(N));
    CHECK(lin.coeff(0, 1) == -d.u / Rational(N));
  }
}

TEST_CASE("bivariate form agrees with eval_P on random sets") {
  for (const auto& p : testing::random_sets(4, 41))
    for (int N = 0; N <= 4; ++N) {
      const auto d = rahman::derive(p);
      for (const auto& m : rahman::lattice(N)) {
        const auto cd = rahman::as_bivariate(m.s, m.t, d, N, ArgumentPair::cd);
        const auto ab = rahman::as_bivariate(m.s, m.t, d, N, ArgumentPair::ab);
        CHECK(cd.total_degree() <= m.s + m.t);
        for (const auto& x : rahman::lattice(N)) {
          CHECK(cd.evaluate(Rational(x.s), Rational(x.t)) == rahman::eval_P(m.s, m.t, x.s, x.t, d, N));
          CHECK(ab.evaluate(Rational(x.s), Rational(x.t)) == rahman::eval_P(x.s, x.t, m.s, m.t, d, N));
        }
      }
    }
}

TEST_CASE("operator arguments") {
  const auto s = rahman::build_structure(testing::P1235());
  const auto& d = s.derived;
  const Rational third(1, 3);
  const auto C = rahman::matrix_of(s.ht_y, 1, Basis::plain, s).shifted(third);
  const auto D = rahman::matrix_of(s.ht_z, 1, Basis::plain, s).shifted(third);
  const auto op = rahman::eval_P_operator(1, 0, C, D, d, 1, rahman::Slot::back);
  const auto by_hand = rahman::ModuleOperator::identity(Basis::plain, 1) - d.t * C - d.u * D;
  CHECK(op == by_hand);
  CHECK(op.apply(Poly3::monomial(Basis::plain, {1, 0, 0})) == Poly3::monomial(Basis::plain, {0, 1, 0}));
  CHECK(rahman::eval_P_operator(0, 0, C, D, d, 1, rahman::Slot::back) ==
        rahman::ModuleOperator::identity(Basis::plain, 1));

  const auto E = rahman::matrix_of(s.e[0][1], 1, Basis::plain, s);
  CHECK_THROWS_AS(rahman::eval_P_operator(1, 0, C, E, d, 1, rahman::Slot::back), rahman::NonCommutingOperators);
}
