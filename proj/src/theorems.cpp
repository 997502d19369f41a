#include "rahman/theorems.hpp"

#include <array>
#include <string>

#include "rahman/combinatorics.hpp"
#include "rahman/polymodule.hpp"
#include "rahman/rahman_poly.hpp"
#include "sums.hpp"

namespace rahman {

namespace {

using detail::Sums;

Rational factorials(const MultiIndex& m) {
  return factorial(m.r) * factorial(m.s) * factorial(m.t);
}

Rational weight_power(const std::array<Rational, 3>& w, const MultiIndex& m) {
  return w[0].pow(m.r) * w[1].pow(m.s) * w[2].pow(m.t);
}

std::string tuple_str(int a, int b, int c, int d) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
         std::to_string(d) + ")";
}

// Coefficients of one seven-term recurrence, without their integer
// prefactors. The shifted pair is (first, second) with complement
// N - first - second; the prefactor of each shift is the coordinate that
// the shift lowers.
struct RecurrenceTable {
  const char* part;
  bool shifts_dual;  // true: shifts act on (sigma, tau); false: on (s, t)
  int eigen_slot;    // which of s, t, sigma, tau supplies the eigenvalue
  Rational down_first;         // (first-1, second), prefactor first
  Rational down_second;        // (first, second-1), prefactor second
  Rational up_first;           // (first+1, second), prefactor complement
  Rational up_first_down_second;  // (first+1, second-1), prefactor second
  Rational up_second;          // (first, second+1), prefactor complement
  Rational down_first_up_second;  // (first-1, second+1), prefactor first
  Rational diag_first;         // multiplies (first - N/3)
  Rational diag_second;        // multiplies (second - N/3)
};

std::array<RecurrenceTable, 4> recurrence_tables(const ParameterSet& p) {
  const Sums q(p);
  const Rational &A = q.s12, &B = q.s13, &C = q.s24, &D = q.s34;
  const Rational& S = q.all;
  const Rational& dl = q.minus_delta;  // p1p4 - p2p3
  const Rational& nd = q.delta;        // p2p3 - p1p4
  const Rational &p1 = q.p1, &p2 = q.p2, &p3 = q.p3, &p4 = q.p4;

  RecurrenceTable i{"(s-N/3)P", true, 0,
                    p3 * dl / (A * B * D),
                    p1 * nd / (A * B * D),
                    p1 * p2 * p3 * S / (A * B * dl),
                    -p1 * p2 / (A * B),
                    p1 * p3 * p4 * S / (B * D * nd),
                    -p3 * p4 / (B * D),
                    p2 * p3 / (A * B) - p1 * p3 * S / (A * B * D),
                    p1 * p4 / (B * D) - p1 * p3 * S / (A * B * D)};
  RecurrenceTable ii{"(t-N/3)P", true, 1,
                     p4 * nd / (A * C * D),
                     p2 * dl / (A * C * D),
                     p1 * p2 * p4 * S / (A * C * nd),
                     -p1 * p2 / (A * C),
                     p2 * p3 * p4 * S / (C * D * dl),
                     -p3 * p4 / (C * D),
                     p1 * p4 / (A * C) - p2 * p4 * S / (A * C * D),
                     p2 * p3 / (C * D) - p2 * p4 * S / (A * C * D)};
  RecurrenceTable iii{"(sigma-N/3)P", false, 2,
                      p2 * dl / (A * B * C),
                      p1 * nd / (A * B * C),
                      p1 * p2 * p3 * S / (A * B * dl),
                      -p1 * p3 / (A * B),
                      p1 * p2 * p4 * S / (A * C * nd),
                      -p2 * p4 / (A * C),
                      p2 * p3 / (A * B) - p1 * p2 * S / (A * B * C),
                      p1 * p4 / (A * C) - p1 * p2 * S / (A * B * C)};
  RecurrenceTable iv{"(tau-N/3)P", false, 3,
                     p4 * nd / (B * D * C),
                     p3 * dl / (B * D * C),
                     p1 * p3 * p4 * S / (B * D * nd),
                     -p1 * p3 / (B * D),
                     p2 * p3 * p4 * S / (C * D * dl),
                     -p2 * p4 / (C * D),
                     p1 * p4 / (B * D) - p3 * p4 * S / (B * D * C),
                     p2 * p3 / (C * D) - p3 * p4 * S / (B * D * C)};
  return {i, ii, iii, iv};
}

}  // namespace

Report verify_derived(const StructureSet& s) {
  Report rep("params.derived");
  const auto& d = s.derived;
  const Rational one(1);
  rep.check(d.eta[0] + d.eta[1] + d.eta[2] == one, "eta sums to 1");
  rep.check(d.eta_tilde[0] + d.eta_tilde[1] + d.eta_tilde[2] == one, "eta~ sums to 1");
  rep.check(d.eta[0] == d.nu.inverse(), "eta0 = 1/nu");
  rep.check(d.eta_tilde[0] == d.nu.inverse(), "eta~0 = 1/nu");
  rep.check(d.theta * d.theta_tilde == d.nu, "theta theta~ = nu");
  rep.check(d.k[0] == one && d.k_tilde[0] == one, "k0 = k~0 = 1");
  for (int i = 0; i < 3; ++i) {
    rep.check(d.k[i] == d.nu * d.eta_tilde[i], "k" + std::to_string(i) + " = nu eta~" + std::to_string(i));
    rep.check(d.k_tilde[i] == d.nu * d.eta[i], "k~" + std::to_string(i) + " = nu eta" + std::to_string(i));
  }
  const Rational* fields[] = {&d.t, &d.u, &d.v, &d.w, &d.nu, &d.theta, &d.theta_tilde,
                              &d.eta[1], &d.eta[2], &d.eta_tilde[1], &d.eta_tilde[2]};
  for (const Rational* f : fields) rep.check(!f->is_zero(), "derived constant is zero");

  const DerivedParams fresh = derive(s.params);
  rep.check(fresh.t == d.t && fresh.u == d.u && fresh.v == d.v && fresh.w == d.w,
            "t, u, v, w disagree with the parameters");
  rep.check(fresh.nu == d.nu && fresh.theta == d.theta && fresh.theta_tilde == d.theta_tilde,
            "nu, theta, theta~ disagree with the parameters");
  rep.check(fresh.eta == d.eta && fresh.eta_tilde == d.eta_tilde, "eta, eta~ disagree with the parameters");
  return rep;
}

Report verify_trans2(const StructureSet& s, int N) {
  Report rep("transitions.trans2");
  const auto& d = s.derived;
  const RahmanTable table(d, N);
  const Rational scale = factorial(N) * d.nu.pow(N) / d.theta.pow(N);
  const auto idx = lattice(N);
  for (const auto& tilde : idx) {
    const Poly3 direct = expand_tilde_monomial_direct(tilde, s);
    for (const auto& plain : idx) {
      const Rational expected = scale * table.at(plain.s, plain.t, tilde.s, tilde.t) *
                                weight_power(d.eta_tilde, plain) / factorials(plain);
      const Rational got = direct.coeff(plain);
      rep.check_lazy(got == expected, [&] {
        return "x~" + tilde.str() + " coefficient of x" + plain.str() + ": " + got.str() +
               " vs " + expected.str();
      });
    }
  }
  return rep;
}

Report verify_trans1(const StructureSet& s, int N) {
  Report rep("transitions.trans1");
  const auto& d = s.derived;
  const RahmanTable table(d, N);
  const Rational scale = factorial(N) * d.nu.pow(N) / d.theta_tilde.pow(N);
  const auto idx = lattice(N);
  for (const auto& plain : idx) {
    const Poly3 direct = expand_plain_monomial_direct(plain, s);
    for (const auto& tilde : idx) {
      const Rational expected = scale * table.at(plain.s, plain.t, tilde.s, tilde.t) *
                                weight_power(d.eta, tilde) / factorials(tilde);
      const Rational got = direct.coeff(tilde);
      rep.check_lazy(got == expected, [&] {
        return "x" + plain.str() + " coefficient of x~" + tilde.str() + ": " + got.str() +
               " vs " + expected.str();
      });
    }
  }
  return rep;
}

Report verify_pcosines(const StructureSet& s, const BilinearForm& f, int N) {
  Report rep("transitions.pcosines");
  const auto& d = s.derived;
  const RahmanTable table(d, N);
  const Rational scale = factorial(N) * d.nu.pow(N);
  const auto idx = lattice(N);
  std::vector<Poly3> tilde_expanded;
  for (const auto& m : idx) tilde_expanded.push_back(expand_tilde_monomial_direct(m, s));
  for (const auto& plain : idx) {
    const Poly3 xi = Poly3::monomial(Basis::plain, plain);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const auto& tilde = idx[j];
      const Rational got = inner(xi, tilde_expanded[j], f, s);
      const Rational expected = scale * table.at(plain.s, plain.t, tilde.s, tilde.t);
      rep.check_lazy(got == expected, [&] {
        return "<x" + plain.str() + ", x~" + tilde.str() + "> = " + got.str() + ", expected " +
               expected.str();
      });
    }
  }
  return rep;
}

Report verify_orthogonality(const StructureSet& s, int N) {
  Report rep("orthogonality");
  const auto& d = s.derived;
  const RahmanTable table(d, N);
  const auto idx = lattice(N);

  std::vector<Rational> weight_tilde, weight_plain;
  for (const auto& m : idx) {
    const std::array<int, 3> parts{m.r, m.s, m.t};
    const Rational multi = multinomial(N, parts);
    weight_tilde.push_back(weight_power(d.eta_tilde, m) * multi);
    weight_plain.push_back(weight_power(d.eta, m) * multi);
  }

  for (const auto& a : idx)
    for (const auto& b : idx) {
      Rational first, second;
      for (std::size_t n = 0; n < idx.size(); ++n) {
        const int j = idx[n].s, k = idx[n].t;
        first += table.at(j, k, a.s, a.t) * table.at(j, k, b.s, b.t) * weight_tilde[n];
        second += table.at(a.s, a.t, j, k) * table.at(b.s, b.t, j, k) * weight_plain[n];
      }
      Rational expected_first, expected_second;
      if (a == b) {
        const std::array<int, 3> parts{a.r, a.s, a.t};
        const Rational multi_inv = multinomial(N, parts).inverse();
        expected_first = multi_inv / (d.k_tilde[1].pow(a.s) * d.k_tilde[2].pow(a.t));
        expected_second = multi_inv / (d.k[1].pow(a.s) * d.k[2].pow(a.t));
      }
      const std::string where = tuple_str(a.s, a.t, b.s, b.t);
      rep.check_lazy(first == expected_first, [&] {
        return "relation 1 at " + where + ": " + first.str() + " vs " + expected_first.str();
      });
      rep.check_lazy(second == expected_second, [&] {
        return "relation 2 at " + where + ": " + second.str() + " vs " + expected_second.str();
      });
    }
  return rep;
}

Report verify_recurrences(const StructureSet& s, int N) {
  Report rep("recurrence");
  const RahmanTable table(s.derived, N);
  const auto tables = recurrence_tables(s.params);
  const Rational third_N(N, 3);
  const auto idx = lattice(N);

  for (const auto& rec : tables) {
    for (const auto& plain : idx)
      for (const auto& dual : idx) {
        const std::array<int, 4> args{plain.s, plain.t, dual.s, dual.t};
        const int base = rec.shifts_dual ? 2 : 0;
        const int first = args[base], second = args[base + 1];
        const int complement = N - first - second;

        struct Term {
          int d_first, d_second;
          Rational coeff;
        };
        const Term terms[] = {
            {-1, 0, Rational(first) * rec.down_first},
            {0, -1, Rational(second) * rec.down_second},
            {+1, 0, Rational(complement) * rec.up_first},
            {+1, -1, Rational(second) * rec.up_first_down_second},
            {0, +1, Rational(complement) * rec.up_second},
            {-1, +1, Rational(first) * rec.down_first_up_second},
            {0, 0, (Rational(first) - third_N) * rec.diag_first +
                       (Rational(second) - third_N) * rec.diag_second},
        };

        const std::string where = std::string("recurrence for ") + rec.part + " at " +
                                  tuple_str(args[0], args[1], args[2], args[3]);
        Rational rhs;
        for (const auto& term : terms) {
          std::array<int, 4> shifted = args;
          shifted[base] += term.d_first;
          shifted[base + 1] += term.d_second;
          const bool in_range = RahmanTable::in_range(shifted[base], shifted[base + 1], N);
          if (!in_range) {
            // Leaving the lattice must coincide with a vanishing prefactor.
            rep.check_lazy(term.coeff.is_zero(), [&] {
              return where + ": nonzero coefficient on out-of-range term";
            });
            continue;
          }
          if (term.coeff.is_zero()) continue;
          rhs += term.coeff * table.at(shifted[0], shifted[1], shifted[2], shifted[3]);
        }
        const Rational lhs = (Rational(args[rec.eigen_slot]) - third_N) *
                             table.at(args[0], args[1], args[2], args[3]);
        rep.check_lazy(lhs == rhs, [&] { return where + ": " + lhs.str() + " vs " + rhs.str(); });
      }
  }
  return rep;
}

Report verify_operator_identities(const StructureSet& s, int N) {
  Report rep("operators");
  const auto& d = s.derived;
  const Rational third_N(N, 3);
  const ModuleOperator back_y = matrix_of(s.ht_y, N, Basis::plain, s).shifted(third_N);
  const ModuleOperator back_z = matrix_of(s.ht_z, N, Basis::plain, s).shifted(third_N);
  const ModuleOperator front_y = matrix_of(s.h_y, N, Basis::tilde, s).shifted(third_N);
  const ModuleOperator front_z = matrix_of(s.h_z, N, Basis::tilde, s).shifted(third_N);
  const MultiIndex top{N, 0, 0};

  for (const auto& m : lattice(N)) {
    const Poly3 plain = eval_P_operator(m.s, m.t, back_y, back_z, d, N, Slot::back)
                            .apply(Poly3::monomial(Basis::plain, top));
    rep.check_lazy(plain == Poly3::monomial(Basis::plain, m), [&] {
      return "P(s,t,ht_y+N/3,ht_z+N/3) x^N at (s,t)=(" + std::to_string(m.s) + "," +
             std::to_string(m.t) + ") gives " + plain.str();
    });
    const Poly3 tilde = eval_P_operator(m.s, m.t, front_y, front_z, d, N, Slot::front)
                            .apply(Poly3::monomial(Basis::tilde, top));
    rep.check_lazy(tilde == Poly3::monomial(Basis::tilde, m), [&] {
      return "P(h_y+N/3,h_z+N/3,s,t) x~^N at (s,t)=(" + std::to_string(m.s) + "," +
             std::to_string(m.t) + ") gives " + tilde.str();
    });
  }
  return rep;
}

}  // namespace rahman
