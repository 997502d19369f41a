#pragma once

#include "rahman/form.hpp"
#include "rahman/report.hpp"
#include "rahman/sl3.hpp"

namespace rahman {

/// Each verifier pairs an independent computation (direct substitution,
/// the bilinear form, operator action or weighted sums of P values) with
/// the closed form it is meant to reproduce.

/// Tilde monomials expanded in plain monomials, against the P-weighted sum.
Report verify_trans2(const StructureSet& s, int N);
/// Plain monomials expanded in tilde monomials, against the P-weighted sum.
Report verify_trans1(const StructureSet& s, int N);
/// <x^r y^s z^t, x~^rho y~^sigma z~^tau> = N! nu^N P(s, t, sigma, tau).
Report verify_pcosines(const StructureSet& s, const BilinearForm& f, int N);
/// Both weighted orthogonality relations over i+j+k = N.
Report verify_orthogonality(const StructureSet& s, int N);
/// The four seven-term recurrences.
Report verify_recurrences(const StructureSet& s, int N);
/// P(s, t, ht_y + N/3, ht_z + N/3) x^N = x^r y^s z^t and the front-slot
/// analogue on x~^N.
Report verify_operator_identities(const StructureSet& s, int N);

/// Sum identities, product identities and closed forms of the derived
/// constants.
Report verify_derived(const StructureSet& s);

}  // namespace rahman
