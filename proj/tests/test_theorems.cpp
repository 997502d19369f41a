#include <doctest.h>

#include <array>

#include "rahman/combinatorics.hpp"
#include "rahman/form.hpp"
#include "rahman/lattice.hpp"
#include "rahman/rahman_poly.hpp"
#include "rahman/suites.hpp"
#include "rahman/theorems.hpp"
#include "support.hpp"

using rahman::Rational;

namespace {

void require_pass(const rahman::Report& rep, int N) {
  INFO(rep.name() << " N=" << N << ": " << rep.first_failure().value_or(""));
  CHECK(rep.passed());
  CHECK(rep.checked() > 0);
}

}  // namespace

TEST_CASE("theorem verifiers on the sample sets") {
  for (const auto& p : testing::sample_sets()) {
    const auto s = rahman::build_structure(p);
    require_pass(rahman::verify_derived(s), 0);
    for (int N = 0; N <= 4; ++N) {
      const rahman::BilinearForm f(s, N);
      require_pass(rahman::verify_trans1(s, N), N);
      require_pass(rahman::verify_trans2(s, N), N);
      require_pass(rahman::verify_pcosines(s, f, N), N);
      require_pass(rahman::verify_orthogonality(s, N), N);
      require_pass(rahman::verify_recurrences(s, N), N);
      require_pass(rahman::verify_operator_identities(s, N), N);
    }
  }
}

TEST_CASE("identity counts") {
  const auto s = rahman::build_structure(testing::P1235());
  CHECK(rahman::verify_trans2(s, 3).checked() == 100);
  CHECK(rahman::verify_pcosines(s, rahman::BilinearForm(s, 4), 4).checked() == 225);
  CHECK(rahman::verify_operator_identities(s, 3).checked() == 20);
}

TEST_CASE("orthogonality sums by hand at N=2") {
  const auto s = rahman::build_structure(testing::P1235());
  const auto& d = s.derived;
  const int N = 2;
  auto relation1 = [&](int s1, int t1, int s2, int t2) {
    Rational sum;
    for (const auto& m : rahman::lattice(N)) {
      const std::array<int, 3> parts{m.r, m.s, m.t};
      sum += rahman::eval_P(m.s, m.t, s1, t1, d, N) * rahman::eval_P(m.s, m.t, s2, t2, d, N) *
             rahman::multinomial(N, parts) * d.eta_tilde[0].pow(m.r) * d.eta_tilde[1].pow(m.s) *
             d.eta_tilde[2].pow(m.t);
    }
    return sum;
  };
  CHECK(relation1(1, 0, 0, 1).is_zero());
  CHECK(relation1(1, 0, 1, 0) == Rational(1) / (d.k_tilde[1] * Rational(2)));
}

TEST_CASE("one recurrence instance by hand") {
  // Eigenvalue s - N/3, shifts in (sigma, tau), at (s,t,sigma,tau) = (1,0,1,0), N = 2.
  const auto p = testing::P1235();
  const auto d = rahman::derive(p);
  const Rational p1 = p.p1, p2 = p.p2, p3 = p.p3, p4 = p.p4, S = p1 + p2 + p3 + p4;
  const Rational A = p1 + p2, B = p1 + p3, D = p3 + p4, dl = p1 * p4 - p2 * p3;
  const int N = 2;
  auto P = [&](int a, int b, int c, int e) { return rahman::eval_P(a, b, c, e, d, N); };
  const Rational sigma(1), tau(0), rho(1), third(N, 3);
  const Rational rhs = sigma * p3 * dl / (A * B * D) * P(1, 0, 0, 0) +
                       rho * p1 * p2 * p3 * S / (A * B * dl) * P(1, 0, 2, 0) +
                       rho * p1 * p3 * p4 * S / (B * D * -dl) * P(1, 0, 1, 1) +
                       sigma * -(p3 * p4) / (B * D) * P(1, 0, 0, 1) +
                       ((sigma - third) * (p2 * p3 / (A * B) - p1 * p3 * S / (A * B * D)) +
                        (tau - third) * (p1 * p4 / (B * D) - p1 * p3 * S / (A * B * D))) *
                           P(1, 0, 1, 0);
  CHECK((Rational(1) - third) * P(1, 0, 1, 0) == rhs);
}

TEST_CASE("corrupting eta~1 breaks suites 2 to 5") {
  for (const auto& p : testing::sample_sets()) {
    auto d = rahman::derive(p);
    d.eta_tilde[1] += Rational(1);
    const auto s = rahman::build_structure(p, d);
    int failures = 0;
    for (const char* suite : {"structure", "module", "form", "transitions", "orthogonality", "recurrence", "operators"})
      for (const auto& rep : rahman::run_suite(suite, s, 2))
        if (!rep.passed()) ++failures;
    CHECK(failures >= 1);
    CHECK_FALSE(rahman::verify_derived(s).passed());
  }
}

TEST_CASE("suite runner") {
  const auto s = rahman::build_structure(testing::P1235());
  const auto all = rahman::run_suite("all", s, 3);
  CHECK(rahman::all_passed(all));
  CHECK(all.front().name() == "params.derived");
  CHECK(all.back().name() == "operators");
  CHECK(rahman::run_suite("recurrence", s, 2).size() == 1);
  CHECK_THROWS_AS(rahman::run_suite("nonsense", s, 2), std::invalid_argument);
  CHECK(rahman::is_suite_name("form"));
  CHECK_FALSE(rahman::is_suite_name("all"));
}
