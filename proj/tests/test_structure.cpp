#include <doctest.h>

#include "rahman/errors.hpp"
#include "rahman/sl3.hpp"
#include "support.hpp"

using rahman::Matrix3;
using rahman::Rational;

namespace {

Matrix3 E(int i, int j) { return Matrix3::unit(i, j); }

}  // namespace

TEST_CASE("R entries and matrix identities at (1,2,3,5)") {
  const auto s = rahman::build_structure(testing::P1235());
  CHECK(s.R(0, 0) == Rational(1, 28));
  CHECK(s.R(0, 0) == s.R_table(0, 0));
  const auto& d = s.derived;
  CHECK(d.nu * s.W * s.U * s.W_tilde * s.U.transpose() == Matrix3::identity());
  CHECK(s.R * s.W * s.R.transpose() == (d.theta_tilde / d.theta) * s.W_tilde);
  CHECK(s.R * s.R_inv == Matrix3::identity());
}

TEST_CASE("matrix arithmetic") {
  const Matrix3 a = E(0, 1) + Rational(2) * E(1, 2);
  CHECK((a * E(2, 0)) == Rational(2) * E(1, 0));
  CHECK(rahman::commutator(E(0, 1), E(1, 0)) == E(0, 0) - E(1, 1));
  CHECK(a.transpose().transpose() == a);
  CHECK(Matrix3::identity().trace() == Rational(3));
}

TEST_CASE("dagger tables") {
  const auto s = rahman::build_structure(testing::P1235());
  const auto& et = s.derived.eta_tilde;
  const auto& e = s.derived.eta;
  CHECK(rahman::dagger(s.h_y, s) == s.h_y);
  CHECK(rahman::dagger(s.h_z, s) == s.h_z);
  CHECK(rahman::dagger(E(0, 1), s) == (et[1] / et[0]) * E(1, 0));
  CHECK(rahman::dagger(s.e_tilde[0][1], s) == (e[1] / e[0]) * s.e_tilde[1][0]);
  CHECK_THROWS_AS(rahman::dagger(Matrix3::identity(), s), rahman::NotTraceless);
}

TEST_CASE("dagger is an involutive antiautomorphism on random sets") {
  for (const auto& p : testing::random_sets(20)) {
    const auto s = rahman::build_structure(p);
    const auto basis = rahman::sl3_basis(s);
    for (const auto& b : basis) CHECK(rahman::dagger(rahman::dagger(b.m, s), s) == b.m);
    for (const auto& b : basis)
      for (const auto& c : basis) {
        const Matrix3 lhs = rahman::dagger(rahman::commutator(b.m, c.m), s);
        const Matrix3 rhs = -rahman::commutator(rahman::dagger(b.m, s), rahman::dagger(c.m, s));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("conjugation") {
  const auto s = rahman::build_structure(testing::P1235());
  CHECK(rahman::tilde_conjugate(Matrix3::identity(), s) == Matrix3::identity());
  CHECK(rahman::tilde_conjugate(s.h_y, s) == s.ht_y);
  CHECK(rahman::tilde_frame(rahman::tilde_conjugate(E(2, 1), s), s) == E(2, 1));
}

TEST_CASE("structure verifiers pass on the sample and random sets") {
  auto sets = testing::sample_sets();
  for (const auto& p : testing::random_sets(20, 99)) sets.push_back(p);
  for (const auto& p : sets) {
    const auto s = rahman::build_structure(p);
    for (const auto& rep : {rahman::verify_matrix_identities(s), rahman::verify_dagger(s),
                            rahman::verify_expansions(s), rahman::verify_generation(s)}) {
      INFO(rep.name() << ": " << rep.first_failure().value_or(""));
      CHECK(rep.passed());
    }
  }
  const auto s = rahman::build_structure(testing::P1235());
  CHECK(rahman::verify_expansions(s).checked() == 4);
  CHECK(rahman::verify_generation(s).checked() == 6);
}

TEST_CASE("perturbing one R entry is caught") {
  auto s = rahman::build_structure(testing::P1235());
  s.R(0, 1) += Rational(1);
  CHECK_FALSE(rahman::verify_expansions(s).passed());
  CHECK_FALSE(rahman::verify_matrix_identities(s).passed());
}

TEST_CASE("corrupted eta~1 is caught by the structure suite") {
  const auto p = testing::P1235();
  auto d = rahman::derive(p);
  d.eta_tilde[1] += Rational(1);
  const auto s = rahman::build_structure(p, d);
  const bool any_failed = !rahman::verify_matrix_identities(s).passed() || !rahman::verify_dagger(s).passed() ||
                          !rahman::verify_expansions(s).passed() || !rahman::verify_generation(s).passed();
  CHECK(any_failed);
}
