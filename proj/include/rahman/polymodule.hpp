#pragma once

#include <array>

#include "rahman/matrix3.hpp"
#include "rahman/module_operator.hpp"
#include "rahman/poly3.hpp"
#include "rahman/report.hpp"
#include "rahman/sl3.hpp"

namespace rahman {

/// Action of a traceless beta on a homogeneous polynomial, as a derivation.
///
/// On the plain variables v0=x, v1=y, v2=z the rule is
/// v_j -> sum_i beta(i,j) v_i. On the tilde variables beta acts through
/// R^{-1} beta R, so R e_ij R^{-1} moves x~, y~, z~ exactly as e_ij moves
/// x, y, z.
Poly3 act(const Matrix3& beta, const Poly3& xi, const StructureSet& s);

ModuleOperator matrix_of(const Matrix3& beta, int N, Basis basis, const StructureSet& s);

/// Degree-one change of variables between the two bases.
struct TildeVariables {
  /// x~, y~, z~ written in x, y, z.
  std::array<Poly3, 3> tilde_in_plain;
  /// x, y, z written in x~, y~, z~.
  std::array<Poly3, 3> plain_in_tilde;
};

TildeVariables tilde_variables(const StructureSet& s);

/// x~^rho y~^sigma z~^tau expanded in x, y, z by direct substitution.
Poly3 expand_tilde_monomial_direct(const MultiIndex& idx, const StructureSet& s);
/// x^rho y^sigma z^tau expanded in x~, y~, z~ by substituting through R^{-1}.
Poly3 expand_plain_monomial_direct(const MultiIndex& idx, const StructureSet& s);

/// Rewrites any polynomial in the plain basis (identity on plain input).
Poly3 to_plain(const Poly3& xi, const StructureSet& s);

Report verify_action_tables(const StructureSet& s, int N);
Report verify_representation_law(const StructureSet& s, int N);
Report verify_weight_diagonality(const StructureSet& s, int N);
Report verify_block_structure(const StructureSet& s, int N);
/// Closure of x^N under the six off-diagonal units; passes iff the span
/// reaches dimension (N+1)(N+2)/2. The reached dimension is in the note.
Report irreducibility_probe(const StructureSet& s, int N);

}  // namespace rahman
