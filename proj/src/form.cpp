#include "rahman/form.hpp"

#include <string>

#include "rahman/combinatorics.hpp"
#include "rahman/errors.hpp"
#include "rahman/polymodule.hpp"

namespace rahman {

namespace {

Rational factorials(const MultiIndex& m) {
  return factorial(m.r) * factorial(m.s) * factorial(m.t);
}

Rational weight_power(const std::array<Rational, 3>& w, const MultiIndex& m) {
  return w[0].pow(m.r) * w[1].pow(m.s) * w[2].pow(m.t);
}

std::vector<Poly3> expanded_tilde_monomials(const StructureSet& s, int N) {
  std::vector<Poly3> out;
  for (const auto& m : lattice(N)) out.push_back(expand_tilde_monomial_direct(m, s));
  return out;
}

}  // namespace

BilinearForm::BilinearForm(const StructureSet& s, int N) : N_(N) {
  const auto& d = s.derived;
  const Rational theta_N = d.theta.pow(N);
  for (const auto& m : lattice(N)) {
    gram_.push_back(factorials(m) * theta_N / weight_power(d.eta_tilde, m));
  }
}

const Rational& BilinearForm::norm(const MultiIndex& idx) const {
  if (idx.degree() != N_) throw DegreeMismatch("index " + idx.str() + " is not of degree " + std::to_string(N_));
  return gram_[lattice_position(idx)];
}

Rational inner(const Poly3& xi, const Poly3& zeta, const BilinearForm& f, const StructureSet& s) {
  if (xi.degree() != f.degree() || zeta.degree() != f.degree()) {
    throw DegreeMismatch("inner: arguments must have degree " + std::to_string(f.degree()));
  }
  const Poly3 a = to_plain(xi, s);
  const Poly3 b = to_plain(zeta, s);
  Rational acc;
  for (const auto& [idx, c] : a.terms()) {
    const Rational other = b.coeff(idx);
    if (!other.is_zero()) acc += f.norm(idx) * c * other;
  }
  return acc;
}

std::vector<Poly3> dual_basis(const BilinearForm& f, const StructureSet& s, Basis kind) {
  const auto& d = s.derived;
  const int N = f.degree();
  const bool plain = kind == Basis::plain;
  const auto& w = plain ? d.eta_tilde : d.eta;
  const Rational scale = (plain ? d.theta : d.theta_tilde).pow(N).inverse();
  std::vector<Poly3> out;
  for (const auto& m : lattice(N)) {
    out.push_back(Poly3::monomial(kind, m, weight_power(w, m) / factorials(m) * scale));
  }
  return out;
}

Report verify_gram(const BilinearForm& f, const StructureSet& s) {
  Report rep("form.gram");
  const int N = f.degree();
  const auto& d = s.derived;
  const auto idx = lattice(N);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    rep.check_lazy(!f.gram()[i].is_zero(), [&] { return "zero norm at " + idx[i].str(); });
    const Poly3 a = Poly3::monomial(Basis::plain, idx[i]);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const Poly3 b = Poly3::monomial(Basis::plain, idx[j]);
      const Rational value = inner(a, b, f, s);
      const Rational expected =
          i == j ? factorials(idx[i]) * d.theta.pow(N) / weight_power(d.eta_tilde, idx[i])
                 : Rational(0);
      rep.check_lazy(value == expected && value == inner(b, a, f, s), [&] {
        return "<" + idx[i].str() + ", " + idx[j].str() + "> = " + value.str() + ", expected " +
               expected.str();
      });
    }
  }
  return rep;
}

Report verify_adjointness(const BilinearForm& f, const StructureSet& s) {
  Report rep("form.adjointness");
  const auto idx = lattice(f.degree());
  auto run = [&](const std::vector<NamedMatrix>& gens) {
    for (const auto& g : gens) {
      const Matrix3 adj = dagger(g.m, s);
      for (const auto& a : idx) {
        const Poly3 xi = Poly3::monomial(Basis::plain, a);
        const Poly3 moved = act(g.m, xi, s);
        for (const auto& b : idx) {
          const Poly3 zeta = Poly3::monomial(Basis::plain, b);
          const Rational lhs = inner(moved, zeta, f, s);
          const Rational rhs = inner(xi, act(adj, zeta, s), f, s);
          rep.check_lazy(lhs == rhs, [&] {
            return g.name + " at (" + a.str() + ", " + b.str() + "): " + lhs.str() + " vs " + rhs.str();
          });
        }
      }
    }
  };
  run(sl3_basis(s));
  run(sl3_tilde_basis(s));
  return rep;
}

Report verify_tilde_norms(const BilinearForm& f, const StructureSet& s) {
  Report rep("form.tilde_norms");
  const int N = f.degree();
  const auto& d = s.derived;
  const auto idx = lattice(N);
  const auto expanded = expanded_tilde_monomials(s, N);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i; j < idx.size(); ++j) {
      const Rational value = inner(expanded[i], expanded[j], f, s);
      const Rational expected =
          i == j ? factorials(idx[i]) * d.theta_tilde.pow(N) / weight_power(d.eta, idx[i])
                 : Rational(0);
      rep.check_lazy(value == expected, [&] {
        return "<x~" + idx[i].str() + ", x~" + idx[j].str() + "> = " + value.str() +
               ", expected " + expected.str();
      });
    }
  return rep;
}

Report verify_dual_pairing(const BilinearForm& f, const StructureSet& s) {
  Report rep("form.dual_pairing");
  const int N = f.degree();
  const auto idx = lattice(N);
  for (Basis kind : {Basis::plain, Basis::tilde}) {
    const auto duals = dual_basis(f, s, kind);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const Poly3 base = Poly3::monomial(kind, idx[i]);
      for (std::size_t j = 0; j < idx.size(); ++j) {
        const Rational value = inner(base, duals[j], f, s);
        rep.check_lazy(value == Rational(i == j ? 1 : 0), [&] {
          return std::string(to_string(kind)) + " pairing at (" + idx[i].str() + ", " +
                 idx[j].str() + ") = " + value.str();
        });
      }
    }
  }
  return rep;
}

Report verify_dual_sum(const Poly3& target, Basis kind, const BilinearForm& f,
                       const StructureSet& s, std::string name) {
  Report rep(std::move(name));
  const int N = f.degree();
  const auto& d = s.derived;
  Poly3 sum(kind, N);
  for (const auto& v : dual_basis(f, s, kind)) sum += v;
  sum *= factorial(N) * d.nu.pow(N);
  const Poly3 lhs = to_plain(target, s);
  const Poly3 rhs = to_plain(sum, s);
  for (const auto& m : lattice(N)) {
    rep.check_lazy(lhs.coeff(m) == rhs.coeff(m), [&] {
      return "coefficient of " + m.str() + ": " + lhs.coeff(m).str() + " vs " + rhs.coeff(m).str();
    });
  }
  return rep;
}

Report verify_dual_sum_plain(const BilinearForm& f, const StructureSet& s) {
  return verify_dual_sum(Poly3::monomial(Basis::tilde, {f.degree(), 0, 0}), Basis::plain, f, s,
                         "form.dual_sum_plain");
}

Report verify_dual_sum_tilde(const BilinearForm& f, const StructureSet& s) {
  return verify_dual_sum(Poly3::monomial(Basis::plain, {f.degree(), 0, 0}), Basis::tilde, f, s,
                         "form.dual_sum_tilde");
}

}  // namespace rahman
