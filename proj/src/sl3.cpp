#include "rahman/sl3.hpp"

#include <string>

#include "rahman/errors.hpp"
#include "sums.hpp"

namespace rahman {

namespace {

using detail::Sums;

Matrix3 r_table(const Sums& q) {
  Matrix3 m;
  const Rational top = q.delta / (q.s13 * q.s24);
  m(0, 0) = top;
  m(0, 1) = top;
  m(0, 2) = top;
  m(1, 0) = q.p1 * q.p3 * q.all / (q.s13 * q.delta);
  m(1, 1) = -q.p3 / q.s13;
  m(1, 2) = q.p1 / q.s13;
  m(2, 0) = q.p2 * q.p4 * q.all / (q.s24 * q.delta);
  m(2, 1) = q.p4 / q.s24;
  m(2, 2) = -q.p2 / q.s24;
  return m;
}

Matrix3 r_inv_table(const Sums& q) {
  Matrix3 m;
  const Rational top = q.delta / (q.s12 * q.s34);
  m(0, 0) = top;
  m(0, 1) = top;
  m(0, 2) = top;
  m(1, 0) = q.p1 * q.p2 * q.all / (q.s12 * q.delta);
  m(1, 1) = -q.p2 / q.s12;
  m(1, 2) = q.p1 / q.s12;
  m(2, 0) = q.p3 * q.p4 * q.all / (q.s34 * q.delta);
  m(2, 1) = q.p4 / q.s34;
  m(2, 2) = -q.p3 / q.s34;
  return m;
}

std::string unit_name(int i, int j) { return "e" + std::to_string(i) + std::to_string(j); }

// Table order of the off-diagonal units.
constexpr int kUnitOrder[6][2] = {{0, 1}, {1, 2}, {0, 2}, {1, 0}, {2, 1}, {2, 0}};

}  // namespace

StructureSet build_structure(const ParameterSet& p) { return build_structure(p, derive(p)); }

StructureSet build_structure(const ParameterSet& p, const DerivedParams& d) {
  validate(p);
  const Sums q(p);

  StructureSet s;
  s.params = p;
  s.derived = d;

  s.U(0, 0) = 1;
  s.U(0, 1) = 1;
  s.U(0, 2) = 1;
  s.U(1, 0) = 1;
  s.U(1, 1) = Rational(1) - d.t;
  s.U(1, 2) = Rational(1) - d.v;
  s.U(2, 0) = 1;
  s.U(2, 1) = Rational(1) - d.u;
  s.U(2, 2) = Rational(1) - d.w;

  s.W = Matrix3::diag(d.eta[0], d.eta[1], d.eta[2]);
  s.W_tilde = Matrix3::diag(d.eta_tilde[0], d.eta_tilde[1], d.eta_tilde[2]);

  s.R = d.theta_tilde * (s.W_tilde * s.U.transpose());
  s.R_inv = d.theta * (s.W * s.U);
  s.R_table = r_table(q);
  s.R_inv_table = r_inv_table(q);

  const Rational third(1, 3);
  s.h_y = Matrix3::diag(-third, Rational(2, 3), -third);
  s.h_z = Matrix3::diag(-third, -third, Rational(2, 3));
  s.h_x = -s.h_y - s.h_z;
  s.ht_y = tilde_conjugate(s.h_y, s);
  s.ht_z = tilde_conjugate(s.h_z, s);
  s.ht_x = -s.ht_y - s.ht_z;

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      s.e[i][j] = Matrix3::unit(i, j);
      s.e_tilde[i][j] = tilde_conjugate(s.e[i][j], s);
    }
  return s;
}

Matrix3 dagger(const Matrix3& beta, const StructureSet& s) {
  if (!beta.trace().is_zero()) throw NotTraceless();
  const auto& et = s.derived.eta_tilde;
  Matrix3 out;
  // W~ beta^t W~^{-1} with W~ diagonal.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = et[i] * beta(j, i) / et[j];
  return out;
}

Matrix3 tilde_conjugate(const Matrix3& beta, const StructureSet& s) {
  return s.R * beta * s.R_inv;
}

Matrix3 tilde_frame(const Matrix3& beta, const StructureSet& s) {
  return s.R_inv * beta * s.R;
}

std::vector<NamedMatrix> sl3_basis(const StructureSet& s) {
  std::vector<NamedMatrix> out;
  for (const auto& ij : kUnitOrder) out.push_back({unit_name(ij[0], ij[1]), s.e[ij[0]][ij[1]]});
  out.push_back({"h_y", s.h_y});
  out.push_back({"h_z", s.h_z});
  return out;
}

std::vector<NamedMatrix> sl3_tilde_basis(const StructureSet& s) {
  std::vector<NamedMatrix> out;
  for (const auto& ij : kUnitOrder)
    out.push_back({unit_name(ij[0], ij[1]) + "~", s.e_tilde[ij[0]][ij[1]]});
  out.push_back({"ht_y", s.ht_y});
  out.push_back({"ht_z", s.ht_z});
  return out;
}

CartanExpansion closed_form_ht_y(const ParameterSet& p) {
  const Sums q(p);
  const Rational abc = q.s12 * q.s13 * q.s24;
  const Rational shared = q.p1 * q.p2 * q.all / abc;
  CartanExpansion c;
  c.e01 = q.p2 * q.minus_delta / abc;
  c.e02 = q.p1 * q.delta / abc;
  c.e10 = q.p1 * q.p2 * q.p3 * q.all / (q.s12 * q.s13 * q.minus_delta);
  c.e12 = -q.p1 * q.p3 / (q.s12 * q.s13);
  c.e20 = q.p1 * q.p2 * q.p4 * q.all / (q.s12 * q.s24 * q.delta);
  c.e21 = -q.p2 * q.p4 / (q.s12 * q.s24);
  c.on_y = q.p2 * q.p3 / (q.s12 * q.s13) - shared;
  c.on_z = q.p1 * q.p4 / (q.s12 * q.s24) - shared;
  return c;
}

CartanExpansion closed_form_ht_z(const ParameterSet& p) {
  const Sums q(p);
  const Rational bdc = q.s13 * q.s34 * q.s24;
  const Rational shared = q.p3 * q.p4 * q.all / bdc;
  CartanExpansion c;
  c.e01 = q.p4 * q.delta / bdc;
  c.e02 = q.p3 * q.minus_delta / bdc;
  c.e10 = q.p1 * q.p3 * q.p4 * q.all / (q.s13 * q.s34 * q.delta);
  c.e12 = -q.p1 * q.p3 / (q.s13 * q.s34);
  c.e20 = q.p2 * q.p3 * q.p4 * q.all / (q.s24 * q.s34 * q.minus_delta);
  c.e21 = -q.p2 * q.p4 / (q.s24 * q.s34);
  c.on_y = q.p1 * q.p4 / (q.s13 * q.s34) - shared;
  c.on_z = q.p2 * q.p3 / (q.s24 * q.s34) - shared;
  return c;
}

CartanExpansion closed_form_h_y(const ParameterSet& p) {
  const Sums q(p);
  const Rational abd = q.s12 * q.s13 * q.s34;
  const Rational shared = q.p1 * q.p3 * q.all / abd;
  CartanExpansion c;
  c.e01 = q.p3 * q.minus_delta / abd;
  c.e02 = q.p1 * q.delta / abd;
  c.e10 = q.p1 * q.p2 * q.p3 * q.all / (q.s12 * q.s13 * q.minus_delta);
  c.e12 = -q.p1 * q.p2 / (q.s12 * q.s13);
  c.e20 = q.p1 * q.p3 * q.p4 * q.all / (q.s13 * q.s34 * q.delta);
  c.e21 = -q.p3 * q.p4 / (q.s13 * q.s34);
  c.on_y = q.p2 * q.p3 / (q.s12 * q.s13) - shared;
  c.on_z = q.p1 * q.p4 / (q.s13 * q.s34) - shared;
  return c;
}

CartanExpansion closed_form_h_z(const ParameterSet& p) {
  const Sums q(p);
  const Rational acd = q.s12 * q.s24 * q.s34;
  const Rational shared = q.p2 * q.p4 * q.all / acd;
  CartanExpansion c;
  c.e01 = q.p4 * q.delta / acd;
  c.e02 = q.p2 * q.minus_delta / acd;
  c.e10 = q.p1 * q.p2 * q.p4 * q.all / (q.s12 * q.s24 * q.delta);
  c.e12 = -q.p1 * q.p2 / (q.s12 * q.s24);
  c.e20 = q.p2 * q.p3 * q.p4 * q.all / (q.s24 * q.s34 * q.minus_delta);
  c.e21 = -q.p3 * q.p4 / (q.s24 * q.s34);
  c.on_y = q.p1 * q.p4 / (q.s12 * q.s24) - shared;
  c.on_z = q.p2 * q.p3 / (q.s24 * q.s34) - shared;
  return c;
}

Matrix3 assemble(const CartanExpansion& c, const std::array<std::array<Matrix3, 3>, 3>& units,
                 const Matrix3& on_y, const Matrix3& on_z) {
  return c.e01 * units[0][1] + c.e02 * units[0][2] + c.e10 * units[1][0] +
         c.e12 * units[1][2] + c.e20 * units[2][0] + c.e21 * units[2][1] + c.on_y * on_y +
         c.on_z * on_z;
}

Report verify_matrix_identities(const StructureSet& s) {
  Report rep("structure.matrices");
  const auto& d = s.derived;
  const Matrix3 I = Matrix3::identity();

  rep.check(s.W == Matrix3::diag(d.eta[0], d.eta[1], d.eta[2]), "W = diag(eta)");
  rep.check(s.W_tilde == Matrix3::diag(d.eta_tilde[0], d.eta_tilde[1], d.eta_tilde[2]),
            "W~ = diag(eta~)");
  rep.check(d.nu * (s.W * s.U * s.W_tilde * s.U.transpose()) == I, "nu W U W~ U^t = I");
  rep.check(s.R == d.theta_tilde * (s.W_tilde * s.U.transpose()), "R = theta~ W~ U^t");
  rep.check(s.R == s.R_table, "R matches its entry table");
  rep.check(s.R_inv == d.theta * (s.W * s.U), "R^-1 = theta W U");
  rep.check(s.R_inv == s.R_inv_table, "R^-1 matches its entry table");
  rep.check(s.R * s.R_inv == I, "R R^-1 = I");
  rep.check(s.R_inv * s.R == I, "R^-1 R = I");
  rep.check(s.R * s.W * s.R.transpose() == (d.theta_tilde / d.theta) * s.W_tilde,
            "R W R^t = theta~/theta W~");

  rep.check(s.h_x == -s.h_y - s.h_z, "h_x = -h_y - h_z");
  rep.check(s.ht_x == -s.ht_y - s.ht_z, "ht_x = -ht_y - ht_z");
  rep.check(s.ht_y == tilde_conjugate(s.h_y, s), "ht_y = R h_y R^-1");
  rep.check(s.ht_z == tilde_conjugate(s.h_z, s), "ht_z = R h_z R^-1");
  rep.check(commutator(s.h_y, s.h_z).is_zero(), "[h_y, h_z] = 0");
  rep.check(commutator(s.ht_y, s.ht_z).is_zero(), "[ht_y, ht_z] = 0");
  for (const auto& b : sl3_tilde_basis(s))
    rep.check(b.m.trace().is_zero(), "trace(" + b.name + ") = 0");
  return rep;
}

Report verify_dagger(const StructureSet& s) {
  Report rep("structure.dagger");
  const auto& et = s.derived.eta_tilde;
  const auto& eta = s.derived.eta;

  const auto plain = sl3_basis(s);
  const auto tilde = sl3_tilde_basis(s);

  // Expected images, in table order e01, e12, e02, e10, e21, e20, h_y, h_z.
  auto expected = [](const std::array<std::array<Matrix3, 3>, 3>& e, const Matrix3& hy,
                     const Matrix3& hz, const std::array<Rational, 3>& w) {
    return std::vector<Matrix3>{
        e[1][0] * (w[1] / w[0]), e[2][1] * (w[2] / w[1]), e[2][0] * (w[2] / w[0]),
        e[0][1] * (w[0] / w[1]), e[1][2] * (w[1] / w[2]), e[0][2] * (w[0] / w[2]),
        hy,                      hz};
  };
  const auto table1 = expected(s.e, s.h_y, s.h_z, et);
  const auto table2 = expected(s.e_tilde, s.ht_y, s.ht_z, eta);

  for (std::size_t i = 0; i < plain.size(); ++i) {
    rep.check(dagger(plain[i].m, s) == table1[i], "first dagger table at " + plain[i].name);
    rep.check(dagger(tilde[i].m, s) == table2[i], "second dagger table at " + tilde[i].name);
    rep.check(dagger(dagger(plain[i].m, s), s) == plain[i].m, "involution at " + plain[i].name);
    rep.check(dagger(dagger(tilde[i].m, s), s) == tilde[i].m, "involution at " + tilde[i].name);
    rep.check(dagger(tilde[i].m, s).trace().is_zero(), "trace preserved at " + tilde[i].name);
  }
  for (const auto& b : plain)
    for (const auto& g : plain) {
      const Matrix3 lhs = dagger(commutator(b.m, g.m), s);
      const Matrix3 rhs = -commutator(dagger(b.m, s), dagger(g.m, s));
      rep.check(lhs == rhs, "antiautomorphism law at [" + b.name + ", " + g.name + "]");
    }
  return rep;
}

Report verify_expansions(const StructureSet& s) {
  Report rep("structure.expansions");
  const auto& p = s.params;
  rep.check(assemble(closed_form_ht_y(p), s.e, s.h_y, s.h_z) == tilde_conjugate(s.h_y, s),
            "closed form of ht_y");
  rep.check(assemble(closed_form_ht_z(p), s.e, s.h_y, s.h_z) == tilde_conjugate(s.h_z, s),
            "closed form of ht_z");
  // The reverse expansions use the conjugated frame.
  std::array<std::array<Matrix3, 3>, 3> et;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) et[i][j] = tilde_conjugate(Matrix3::unit(i, j), s);
  const Matrix3 hty = tilde_conjugate(s.h_y, s);
  const Matrix3 htz = tilde_conjugate(s.h_z, s);
  rep.check(assemble(closed_form_h_y(p), et, hty, htz) == s.h_y, "closed form of h_y");
  rep.check(assemble(closed_form_h_z(p), et, hty, htz) == s.h_z, "closed form of h_z");
  return rep;
}

Report verify_generation(const StructureSet& s) {
  Report rep("structure.generation");
  const auto& et = s.derived.eta_tilde;
  const Matrix3 x_pair = commutator(s.h_x, s.ht_x);  // [psi, psi~]
  const Matrix3 z_pair = commutator(s.h_z, s.ht_x);

  // (-[h, [a, b]] +/- [h, [h, [a, b]]]) / (2 eta~_k)
  auto nested = [](const Matrix3& h, const Matrix3& inner, int sign, const Rational& weight) {
    const Matrix3 once = commutator(h, inner);
    const Matrix3 twice = commutator(h, once);
    return (Rational(sign) * twice - once) * (Rational(1) / (Rational(2) * weight));
  };

  struct Generator {
    int i, j;
    Matrix3 value;
  };
  const Generator gens[] = {
      {0, 1, nested(s.h_y, x_pair, +1, et[0])},
      {1, 0, nested(s.h_y, x_pair, -1, et[1])},
      {0, 2, nested(s.h_z, x_pair, +1, et[0])},
      {2, 0, nested(s.h_z, x_pair, -1, et[2])},
      {1, 2, nested(s.h_y, z_pair, -1, et[1])},
      {2, 1, nested(s.h_y, z_pair, +1, et[2])},
  };
  for (const auto& g : gens) {
    rep.check(g.value == Matrix3::unit(g.i, g.j), unit_name(g.i, g.j) + " from nested brackets");
  }
  return rep;
}

}  // namespace rahman
