#pragma once

#include <array>
#include <optional>
#include <string>

#include "rahman/rational.hpp"

namespace rahman {

/// The four free parameters p1..p4.
struct ParameterSet {
  Rational p1;
  Rational p2;
  Rational p3;
  Rational p4;

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

/// Every constant derived from p1..p4.
///
/// `eta` and `eta_tilde` are the two weight triples, each summing to 1, with
/// eta[0] = eta_tilde[0] = 1/nu. `k[i] = nu * eta_tilde[i]` and
/// `k_tilde[i] = nu * eta[i]`. `theta * theta_tilde = nu`.
struct DerivedParams {
  Rational t, u, v, w;
  Rational nu;
  std::array<Rational, 3> eta;
  std::array<Rational, 3> eta_tilde;
  std::array<Rational, 3> k;
  std::array<Rational, 3> k_tilde;
  Rational theta;
  Rational theta_tilde;
};

/// Name of the first vanishing denominator, in the fixed order
/// p1, p2, p3, p4, p1+p2, p1+p3, p2+p4, p3+p4, p1+p2+p3+p4, p1p4-p2p3.
std::optional<std::string> first_zero_denominator(const ParameterSet& p);

/// Throws ValidationError naming the first vanishing denominator.
void validate(const ParameterSet& p);

DerivedParams derive(const ParameterSet& p);

}  // namespace rahman
