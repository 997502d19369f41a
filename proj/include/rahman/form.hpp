#pragma once

#include <vector>

#include "rahman/poly3.hpp"
#include "rahman/rational.hpp"
#include "rahman/report.hpp"
#include "rahman/sl3.hpp"

namespace rahman {

/// Symmetric bilinear form on degree-N polynomials, diagonal on the plain
/// monomials with
///   <x^r y^s z^t, x^r y^s z^t> = r! s! t! theta^N / (et0^r et1^s et2^t)
/// where et = eta_tilde. No positivity is assumed.
class BilinearForm {
 public:
  BilinearForm(const StructureSet& s, int N);

  int degree() const { return N_; }
  /// Gram diagonal in lattice order.
  const std::vector<Rational>& gram() const { return gram_; }
  const Rational& norm(const MultiIndex& idx) const;

 private:
  int N_;
  std::vector<Rational> gram_;
};

/// <xi, zeta>. Tilde inputs are first expanded into the plain basis.
/// Throws DegreeMismatch.
Rational inner(const Poly3& xi, const Poly3& zeta, const BilinearForm& f,
               const StructureSet& s);

/// Dual of the plain monomial basis (kind = plain) or of the tilde monomial
/// basis (kind = tilde), in lattice order.
std::vector<Poly3> dual_basis(const BilinearForm& f, const StructureSet& s, Basis kind);

Report verify_gram(const BilinearForm& f, const StructureSet& s);
Report verify_adjointness(const BilinearForm& f, const StructureSet& s);
Report verify_tilde_norms(const BilinearForm& f, const StructureSet& s);
/// Pairing of each monomial basis with its dual basis is the identity.
Report verify_dual_pairing(const BilinearForm& f, const StructureSet& s);
/// x~^N = N! nu^N * (sum of the plain dual basis).
Report verify_dual_sum_plain(const BilinearForm& f, const StructureSet& s);
/// x^N = N! nu^N * (sum of the tilde dual basis).
Report verify_dual_sum_tilde(const BilinearForm& f, const StructureSet& s);
/// Checks `target` = N! nu^N * (sum of the dual basis of `kind`) as vectors.
Report verify_dual_sum(const Poly3& target, Basis kind, const BilinearForm& f,
                       const StructureSet& s, std::string name);

}  // namespace rahman
