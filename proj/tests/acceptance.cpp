// Acceptance suite: one PASS/FAIL line per criterion, all identities exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rahman/form.hpp"
#include "rahman/lattice.hpp"
#include "rahman/polymodule.hpp"
#include "rahman/rahman_poly.hpp"
#include "rahman/sl3.hpp"
#include "rahman/suites.hpp"
#include "rahman/theorems.hpp"

namespace {

using namespace rahman;
using Clock = std::chrono::steady_clock;

const std::vector<ParameterSet> kSets = {{1, 2, 3, 5}, {2, 1, 7, 3}, {1, -2, 3, 5}};

std::string label(const ParameterSet& p) {
  return "(" + p.p1.str() + "," + p.p2.str() + "," + p.p3.str() + "," + p.p4.str() + ")";
}

/// Accumulates reports for one criterion and remembers the first failure.
struct Tally {
  std::size_t identities = 0;
  std::string failure;

  void add(const Report& r, const std::string& where) {
    identities += r.checked();
    if (!r.passed() && failure.empty()) failure = r.name() + " " + where + ": " + r.first_failure().value_or("");
  }
  void require(bool ok, const std::string& what) {
    ++identities;
    if (!ok && failure.empty()) failure = what;
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<void(Tally&)> body;
};

std::string where(const ParameterSet& p, int N) { return "p=" + label(p) + " N=" + std::to_string(N); }

void derived_constants(Tally& t) {
  for (const auto& p : kSets) t.add(verify_derived(build_structure(p)), where(p, 0));
  const auto d = derive(kSets[0]);
  t.require(d.nu == Rational(672), "nu at (1,2,3,5)");
  t.require(d.theta == Rational(28), "theta at (1,2,3,5)");
  t.require(d.theta_tilde == Rational(24), "theta~ at (1,2,3,5)");
  t.require(d.eta == std::array<Rational, 3>{Rational(1, 672), Rational(11, 42), Rational(165, 224)},
            "eta at (1,2,3,5)");
  t.require(d.eta_tilde == std::array<Rational, 3>{Rational(1, 672), Rational(11, 32), Rational(55, 84)},
            "eta~ at (1,2,3,5)");
}

void structure(Tally& t) {
  for (const auto& p : kSets) {
    const auto start = Clock::now();
    const auto s = build_structure(p);
    for (const auto& r : run_suite("structure", s, 0)) t.add(r, where(p, 0));
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    t.require(secs < 1.0, "structure suite took " + std::to_string(secs) + " s at " + label(p));
  }
}

void module(Tally& t) {
  for (const auto& p : kSets) {
    const auto s = build_structure(p);
    for (int N = 0; N <= 5; ++N) {
      if (N <= 4) t.add(verify_representation_law(s, N), where(p, N));
      t.add(verify_action_tables(s, N), where(p, N));
      t.add(verify_weight_diagonality(s, N), where(p, N));
      t.add(verify_block_structure(s, N), where(p, N));
      const Report irr = irreducibility_probe(s, N);
      t.add(irr, where(p, N));
      const std::string D = std::to_string(lattice_size(N));
      t.require(irr.note() == "reached dimension " + D + " of " + D, "irreducibility probe at " + where(p, N));
    }
  }
}

void form(Tally& t) {
  for (const auto& p : kSets) {
    const auto s = build_structure(p);
    for (int N = 0; N <= 5; ++N) {
      const BilinearForm f(s, N);
      t.add(verify_gram(f, s), where(p, N));
      if (N <= 4) {
        t.add(verify_adjointness(f, s), where(p, N));
        t.add(verify_tilde_norms(f, s), where(p, N));
      }
      // Both dual-basis sums, each compared with x~^N as stated.
      const Poly3 target = Poly3::monomial(Basis::tilde, {N, 0, 0});
      t.add(verify_dual_sum(target, Basis::plain, f, s, "x~^N vs plain dual sum"), where(p, N));
      t.add(verify_dual_sum(target, Basis::tilde, f, s, "x~^N vs tilde dual sum"), where(p, N));
    }
  }
}

void theorems(Tally& t) {
  for (const auto& p : kSets) {
    const auto s = build_structure(p);
    for (int N = 0; N <= 5; ++N) {
      if (N <= 4) {
        const BilinearForm f(s, N);
        t.add(verify_trans1(s, N), where(p, N));
        t.add(verify_trans2(s, N), where(p, N));
        t.add(verify_pcosines(s, f, N), where(p, N));
        t.add(verify_recurrences(s, N), where(p, N));
        t.add(verify_operator_identities(s, N), where(p, N));
      }
      t.add(verify_orthogonality(s, N), where(p, N));
    }
  }
}

void corruption(Tally& t) {
  for (const auto& p : kSets) {
    auto d = derive(p);
    d.eta_tilde[1] += Rational(1);
    const auto s = build_structure(p, d);
    std::size_t failed = 0;
    for (const char* suite : {"structure", "module", "form", "transitions", "orthogonality", "recurrence", "operators"})
      for (const auto& r : run_suite(suite, s, 2)) failed += r.passed() ? 0 : 1;
    t.require(failed >= 1, "corrupted eta~1 went unnoticed at " + label(p));
  }
}

void spot_values(Tally& t) {
  for (const auto& p : kSets) {
    const auto d = derive(p);
    for (int N = 0; N <= 5; ++N)
      for (const auto& m : lattice(N)) {
        t.require(eval_P(0, 0, m.s, m.t, d, N) == Rational(1), "P(0,0,c,d) at " + where(p, N));
        t.require(eval_P(m.s, m.t, 0, 0, d, N) == Rational(1), "P(a,b,0,0) at " + where(p, N));
      }
  }
  const auto s = build_structure(kSets[0]);
  t.require(eval_P(1, 0, 1, 0, s.derived, 1) == Rational(-1, 11), "P(1,0,1,0) at (1,2,3,5), N=1");
  const BilinearForm f(s, 1);
  t.require(inner(Poly3::monomial(Basis::plain, {0, 1, 0}), Poly3::monomial(Basis::tilde, {1, 0, 0}), f, s) ==
                Rational(672),
            "<y, x~> at (1,2,3,5), N=1");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "derived constants", 1.0, derived_constants},
      {2, "structure matrices, dagger, expansions, generation", 3.0, structure},
      {3, "module action, representation law, weights, blocks, irreducibility", 30.0, module},
      {4, "bilinear form, adjointness, tilde norms, dual-basis sums", 60.0, form},
      {5, "transitions, pcosines, orthogonality, recurrences, operator identities", 300.0, theorems},
      {6, "corruption sensitivity", 300.0, corruption},
      {7, "spot values", 10.0, spot_values},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = Clock::now();
    try {
      c.body(t);
    } catch (const std::exception& e) {
      if (t.failure.empty()) t.failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (t.failure.empty() && secs >= c.limit_seconds)
      t.failure = "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.limit_seconds) + " s";
    const bool ok = t.failure.empty();
    if (!ok) ++failed;
    std::printf("[%s] %d %s: %zu identities, %.2f s%s%s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(),
                t.identities, secs, ok ? "" : "; first failure: ", ok ? "" : t.failure.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
