#include <doctest.h>

#include "rahman/errors.hpp"
#include "rahman/params.hpp"
#include "support.hpp"

using rahman::Rational;

TEST_CASE("validation names the first zero denominator") {
  CHECK_NOTHROW(rahman::validate(testing::P1235()));
  CHECK(rahman::first_zero_denominator({1, 2, 3, 6}) == "p1p4-p2p3");
  CHECK(rahman::first_zero_denominator({1, -1, 3, 5}) == "p1+p2");
  CHECK(rahman::first_zero_denominator({0, 2, 3, 5}) == "p1");
  CHECK(rahman::first_zero_denominator({1, 2, 3, -6}) == "p1+p2+p3+p4");
  CHECK(rahman::first_zero_denominator({1, 2, -1, 5}) == "p1+p3");
  CHECK(rahman::first_zero_denominator({1, 2, 3, -2}) == "p2+p4");
  try {
    rahman::derive({1, 2, 3, 6});
    FAIL("expected ValidationError");
  } catch (const rahman::ValidationError& e) {
    CHECK(e.expression() == "p1p4-p2p3");
  }
}

TEST_CASE("derived constants at (1,2,3,5)") {
  const auto d = rahman::derive(testing::P1235());
  CHECK(d.nu == Rational(672));
  CHECK(d.theta == Rational(28));
  CHECK(d.theta_tilde == Rational(24));
  CHECK(d.eta == std::array<Rational, 3>{Rational(1, 672), Rational(11, 42), Rational(165, 224)});
  CHECK(d.eta_tilde == std::array<Rational, 3>{Rational(1, 672), Rational(11, 32), Rational(55, 84)});
  CHECK(d.t == Rational(12, 11));
}

TEST_CASE("derived constants at the other sample sets") {
  const auto d = rahman::derive(testing::P2173());
  CHECK(d.nu == Rational(1080));
  CHECK(d.theta == Rational(36));
  CHECK(rahman::derive(testing::P1m235()).nu == Rational(-96, 121));
}

TEST_CASE("derived-constant identities on random parameter sets") {
  for (const auto& p : testing::random_sets(20)) {
    const auto d = rahman::derive(p);
    CHECK(d.eta[0] + d.eta[1] + d.eta[2] == Rational(1));
    CHECK(d.eta_tilde[0] + d.eta_tilde[1] + d.eta_tilde[2] == Rational(1));
    CHECK(d.theta * d.theta_tilde == d.nu);
    CHECK(d.k[0] == Rational(1));
    CHECK(d.k_tilde[0] == Rational(1));
    CHECK(d.eta[0] == d.nu.inverse());
    CHECK(d.eta_tilde[0] == d.nu.inverse());
    const auto tuvw = testing::tuvw_of(p);
    CHECK(d.t == tuvw[0]);
    CHECK(d.u == tuvw[1]);
    CHECK(d.v == tuvw[2]);
    CHECK(d.w == tuvw[3]);
  }
}
