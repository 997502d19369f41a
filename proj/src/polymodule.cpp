#include "rahman/polymodule.hpp"

#include <deque>
#include <string>
#include <utility>

#include "rahman/errors.hpp"

namespace rahman {

namespace {

// Derivation with v_j -> sum_i m(i,j) v_i, in whatever variables xi uses.
Poly3 derive_by(const Matrix3& m, const Poly3& xi) {
  Poly3 out(xi.basis(), xi.degree());
  for (const auto& [idx, c] : xi.terms()) {
    for (int j = 0; j < 3; ++j) {
      if (idx[j] == 0) continue;
      for (int i = 0; i < 3; ++i) {
        if (m(i, j).is_zero()) continue;
        MultiIndex moved = idx;
        --moved[j];
        ++moved[i];
        out.add_term(moved, c * Rational(idx[j]) * m(i, j));
      }
    }
  }
  return out;
}

Matrix3 frame_matrix(const Matrix3& beta, Basis basis, const StructureSet& s) {
  if (!beta.trace().is_zero()) throw NotTraceless();
  return basis == Basis::plain ? beta : tilde_frame(beta, s);
}

ModuleOperator operator_from(const Matrix3& m, int N, Basis basis) {
  ModuleOperator op(basis, N);
  const auto idx = lattice(N);
  for (std::size_t col = 0; col < idx.size(); ++col) {
    const Poly3 image = derive_by(m, Poly3::monomial(basis, idx[col]));
    for (const auto& [k, c] : image.terms()) op(lattice_position(k), col) = c;
  }
  return op;
}

Poly3 substitute(const MultiIndex& idx, const std::array<Poly3, 3>& vars) {
  return vars[0].pow(idx.r) * vars[1].pow(idx.s) * vars[2].pow(idx.t);
}

}  // namespace

Poly3 act(const Matrix3& beta, const Poly3& xi, const StructureSet& s) {
  return derive_by(frame_matrix(beta, xi.basis(), s), xi);
}

ModuleOperator matrix_of(const Matrix3& beta, int N, Basis basis, const StructureSet& s) {
  return operator_from(frame_matrix(beta, basis, s), N, basis);
}

TildeVariables tilde_variables(const StructureSet& s) {
  TildeVariables tv;
  const MultiIndex unit[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int j = 0; j < 3; ++j) {
    Poly3 tilde(Basis::plain, 1);
    Poly3 plain(Basis::tilde, 1);
    for (int i = 0; i < 3; ++i) {
      tilde.add_term(unit[i], s.R(i, j));
      plain.add_term(unit[i], s.R_inv(i, j));
    }
    tv.tilde_in_plain[j] = std::move(tilde);
    tv.plain_in_tilde[j] = std::move(plain);
  }
  return tv;
}

Poly3 expand_tilde_monomial_direct(const MultiIndex& idx, const StructureSet& s) {
  return substitute(idx, tilde_variables(s).tilde_in_plain);
}

Poly3 expand_plain_monomial_direct(const MultiIndex& idx, const StructureSet& s) {
  return substitute(idx, tilde_variables(s).plain_in_tilde);
}

Poly3 to_plain(const Poly3& xi, const StructureSet& s) {
  if (xi.basis() == Basis::plain) return xi;
  const auto vars = tilde_variables(s).tilde_in_plain;
  Poly3 out(Basis::plain, xi.degree());
  for (const auto& [idx, c] : xi.terms()) out += c * substitute(idx, vars);
  return out;
}

Report verify_action_tables(const StructureSet& s, int N) {
  Report rep("module.action_tables");
  const Rational third_N(N, 3);
  for (Basis basis : {Basis::plain, Basis::tilde}) {
    const auto& e = basis == Basis::plain ? s.e : s.e_tilde;
    const Matrix3& hy = basis == Basis::plain ? s.h_y : s.ht_y;
    const Matrix3& hz = basis == Basis::plain ? s.h_z : s.ht_z;
    for (const auto& m : lattice(N)) {
      const int r = m.r, sd = m.s, t = m.t;
      const Poly3 xi = Poly3::monomial(basis, m);
      auto term = [&](int coeff, MultiIndex target) {
        Poly3 p(basis, N);
        if (coeff != 0) p.add_term(target, Rational(coeff));
        return p;
      };
      const std::pair<Matrix3, Poly3> table[] = {
          {e[0][1], term(sd, {r + 1, sd - 1, t})},
          {e[1][2], term(t, {r, sd + 1, t - 1})},
          {e[0][2], term(t, {r + 1, sd, t - 1})},
          {e[1][0], term(r, {r - 1, sd + 1, t})},
          {e[2][1], term(sd, {r, sd - 1, t + 1})},
          {e[2][0], term(r, {r - 1, sd, t + 1})},
          {hy, Poly3::monomial(basis, m, Rational(sd) - third_N)},
          {hz, Poly3::monomial(basis, m, Rational(t) - third_N)},
      };
      const char* names[] = {"e01", "e12", "e02", "e10", "e21", "e20", "h_y", "h_z"};
      for (std::size_t g = 0; g < 8; ++g) {
        rep.check_lazy(act(table[g].first, xi, s) == table[g].second, [&] {
          return std::string(names[g]) + " on " + to_string(basis) + " monomial " + m.str();
        });
      }
    }
  }
  return rep;
}

Report verify_representation_law(const StructureSet& s, int N) {
  Report rep("module.representation_law");
  const auto basis = sl3_basis(s);
  std::vector<ModuleOperator> ops;
  for (const auto& b : basis) ops.push_back(matrix_of(b.m, N, Basis::plain, s));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const ModuleOperator lhs = matrix_of(commutator(basis[i].m, basis[j].m), N, Basis::plain, s);
      const ModuleOperator rhs = ops[i] * ops[j] - ops[j] * ops[i];
      rep.check_lazy(lhs == rhs, [&] {
        return "bracket [" + basis[i].name + ", " + basis[j].name + "] at N=" + std::to_string(N);
      });
    }
  // The tilde module replicates the plain action tables.
  const auto tilde = sl3_tilde_basis(s);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const ModuleOperator op = matrix_of(tilde[i].m, N, Basis::tilde, s);
    bool same = true;
    for (std::size_t r = 0; r < op.dim() && same; ++r)
      for (std::size_t c = 0; c < op.dim() && same; ++c) same = op(r, c) == ops[i](r, c);
    rep.check_lazy(same, [&] { return "tilde compatibility at " + basis[i].name; });
  }
  return rep;
}

Report verify_weight_diagonality(const StructureSet& s, int N) {
  Report rep("module.weights");
  const Rational third_N(N, 3);
  const auto idx = lattice(N);
  struct Case {
    const char* name;
    const Matrix3* m;
    Basis basis;
    int coordinate;
  };
  const Case cases[] = {{"h_y", &s.h_y, Basis::plain, 1},
                        {"h_z", &s.h_z, Basis::plain, 2},
                        {"ht_y", &s.ht_y, Basis::tilde, 1},
                        {"ht_z", &s.ht_z, Basis::tilde, 2}};
  for (const auto& c : cases) {
    const ModuleOperator op = matrix_of(*c.m, N, c.basis, s);
    rep.check(op.is_diagonal(), std::string(c.name) + " not diagonal in its own basis");
    for (std::size_t k = 0; k < idx.size(); ++k) {
      rep.check_lazy(op(k, k) == Rational(idx[k][c.coordinate]) - third_N, [&] {
        return std::string(c.name) + " eigenvalue at " + idx[k].str();
      });
    }
  }
  return rep;
}

Report verify_block_structure(const StructureSet& s, int N) {
  Report rep("module.block_structure");
  const auto idx = lattice(N);
  struct Case {
    const char* name;
    const Matrix3* m;
    Basis basis;
  };
  const Case cases[] = {{"ht_y", &s.ht_y, Basis::plain},
                        {"ht_z", &s.ht_z, Basis::plain},
                        {"h_y", &s.h_y, Basis::tilde},
                        {"h_z", &s.h_z, Basis::tilde}};
  for (const auto& c : cases) {
    const ModuleOperator op = matrix_of(*c.m, N, c.basis, s);
    for (std::size_t row = 0; row < idx.size(); ++row)
      for (std::size_t col = 0; col < idx.size(); ++col) {
        const bool allowed = row == col || adjacent(idx[row], idx[col]);
        rep.check_lazy(allowed || op(row, col).is_zero(), [&] {
          return std::string(c.name) + " in " + to_string(c.basis) + " basis maps " +
                 idx[col].str() + " onto non-adjacent " + idx[row].str();
        });
      }
  }
  return rep;
}

namespace {

// Fully reduced row-echelon basis of a growing subspace.
class EchelonSpan {
 public:
  // Returns true if v was independent of the current span (and adds it).
  bool insert(std::vector<Rational> v) {
    for (const auto& [pivot, b] : rows_) {
      if (v[pivot].is_zero()) continue;
      const Rational f = v[pivot];
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!b[k].is_zero()) v[k] -= f * b[k];
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
    if (pivot == v.size()) return false;
    const Rational inv = v[pivot].inverse();
    for (auto& x : v) x *= inv;
    for (auto& [p, b] : rows_) {
      if (b[pivot].is_zero()) continue;
      const Rational f = b[pivot];
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) b[k] -= f * v[k];
    }
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }

  std::size_t dim() const { return rows_.size(); }

 private:
  std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

}  // namespace

Report irreducibility_probe(const StructureSet& s, int N) {
  Report rep("module.irreducibility");
  std::vector<ModuleOperator> raising;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) raising.push_back(matrix_of(s.e[i][j], N, Basis::plain, s));

  EchelonSpan span;
  std::deque<std::vector<Rational>> frontier;
  std::vector<Rational> start(lattice_size(N));
  start[lattice_position({N, 0, 0})] = 1;
  span.insert(start);
  frontier.push_back(std::move(start));
  while (!frontier.empty()) {
    const auto v = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& op : raising) {
      auto image = op.apply(v);
      if (span.insert(image)) frontier.push_back(std::move(image));
    }
  }
  const std::size_t D = lattice_size(N);
  rep.check(span.dim() == D, "closure of x^N has dimension " + std::to_string(span.dim()) +
                                 ", expected " + std::to_string(D));
  rep.set_note("reached dimension " + std::to_string(span.dim()) + " of " + std::to_string(D));
  return rep;
}

}  // namespace rahman
