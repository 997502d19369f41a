#pragma once

#include <array>
#include <string>
#include <vector>

#include "rahman/matrix3.hpp"
#include "rahman/params.hpp"
#include "rahman/report.hpp"

namespace rahman {

/// The structural matrices of sl3 attached to one parameter set.
///
/// `h_y = diag(-1/3, 2/3, -1/3)` and `h_z = diag(-1/3, -1/3, 2/3)` span the
/// diagonal Cartan subalgebra H; `h_x = -h_y - h_z`. The `ht_*` members are
/// their conjugates R h R^{-1}, spanning the second Cartan subalgebra.
/// `R` and `R_inv` come from the factored forms; the `_table` members are the
/// closed-form entry tables, kept so the two sources can be cross-checked.
struct StructureSet {
  ParameterSet params;
  DerivedParams derived;

  Matrix3 U, W, W_tilde;
  Matrix3 R, R_inv;
  Matrix3 R_table, R_inv_table;

  Matrix3 h_y, h_z, h_x;
  Matrix3 ht_y, ht_z, ht_x;

  /// e[i][j] matrix units and their conjugates R e_ij R^{-1}.
  std::array<std::array<Matrix3, 3>, 3> e;
  std::array<std::array<Matrix3, 3>, 3> e_tilde;
};

/// Validates, derives and builds.
StructureSet build_structure(const ParameterSet& p);

/// Builds from externally supplied derived constants (used to inject
/// corrupted constants when testing verifier power). The closed-form tables
/// are always computed from `p`.
StructureSet build_structure(const ParameterSet& p, const DerivedParams& d);

/// beta^dagger = W~ beta^t W~^{-1}. Throws NotTraceless.
Matrix3 dagger(const Matrix3& beta, const StructureSet& s);

/// R beta R^{-1}.
Matrix3 tilde_conjugate(const Matrix3& beta, const StructureSet& s);

/// R^{-1} beta R: the matrix by which beta acts on the tilde variables.
Matrix3 tilde_frame(const Matrix3& beta, const StructureSet& s);

struct NamedMatrix {
  std::string name;
  Matrix3 m;
};

/// e01, e12, e02, e10, e21, e20, h_y, h_z (table order).
std::vector<NamedMatrix> sl3_basis(const StructureSet& s);
/// The R-conjugates of sl3_basis, same order.
std::vector<NamedMatrix> sl3_tilde_basis(const StructureSet& s);

/// Coefficients of a Cartan element written in the other frame:
/// sum of off-diagonal units plus multiples of the two Cartan generators.
struct CartanExpansion {
  Rational e01, e02, e10, e12, e20, e21;
  Rational on_y, on_z;
};

/// ht_y, ht_z in terms of e_ij, h_y, h_z.
CartanExpansion closed_form_ht_y(const ParameterSet& p);
CartanExpansion closed_form_ht_z(const ParameterSet& p);
/// h_y, h_z in terms of e~_ij, ht_y, ht_z.
CartanExpansion closed_form_h_y(const ParameterSet& p);
CartanExpansion closed_form_h_z(const ParameterSet& p);

/// Evaluates an expansion against a frame of units and Cartan generators.
Matrix3 assemble(const CartanExpansion& c,
                 const std::array<std::array<Matrix3, 3>, 3>& units,
                 const Matrix3& on_y, const Matrix3& on_z);

Report verify_matrix_identities(const StructureSet& s);
Report verify_dagger(const StructureSet& s);
Report verify_expansions(const StructureSet& s);
Report verify_generation(const StructureSet& s);

}  // namespace rahman
