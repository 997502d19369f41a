#include "rahman/params.hpp"

#include <utility>

#include "rahman/errors.hpp"

namespace rahman {

std::optional<std::string> first_zero_denominator(const ParameterSet& p) {
  const std::pair<const char*, Rational> denominators[] = {
      {"p1", p.p1},
      {"p2", p.p2},
      {"p3", p.p3},
      {"p4", p.p4},
      {"p1+p2", p.p1 + p.p2},
      {"p1+p3", p.p1 + p.p3},
      {"p2+p4", p.p2 + p.p4},
      {"p3+p4", p.p3 + p.p4},
      {"p1+p2+p3+p4", p.p1 + p.p2 + p.p3 + p.p4},
      {"p1p4-p2p3", p.p1 * p.p4 - p.p2 * p.p3},
  };
  for (const auto& [name, value] : denominators) {
    if (value.is_zero()) return std::string(name);
  }
  return std::nullopt;
}

void validate(const ParameterSet& p) {
  if (auto which = first_zero_denominator(p)) throw ValidationError(*which);
}

DerivedParams derive(const ParameterSet& p) {
  validate(p);
  const Rational &p1 = p.p1, &p2 = p.p2, &p3 = p.p3, &p4 = p.p4;
  const Rational sum = p1 + p2 + p3 + p4;
  const Rational s12 = p1 + p2, s13 = p1 + p3, s24 = p2 + p4, s34 = p3 + p4;
  // p2p3 - p1p4, the sign convention of theta and theta~.
  const Rational delta = p2 * p3 - p1 * p4;

  DerivedParams d;
  d.t = s12 * s13 / (p1 * sum);
  d.u = s13 * s34 / (p3 * sum);
  d.v = s12 * s24 / (p2 * sum);
  d.w = s24 * s34 / (p4 * sum);
  d.nu = s12 * s13 * s24 * s34 / (delta * delta);

  d.eta = {d.nu.inverse(), p1 * p2 * sum / (s12 * s13 * s24), p3 * p4 * sum / (s13 * s24 * s34)};
  d.eta_tilde = {d.nu.inverse(), p1 * p3 * sum / (s12 * s13 * s34),
                 p2 * p4 * sum / (s12 * s24 * s34)};
  for (int i = 0; i < 3; ++i) {
    d.k[i] = d.nu * d.eta_tilde[i];
    d.k_tilde[i] = d.nu * d.eta[i];
  }
  d.theta = s13 * s24 / delta;
  d.theta_tilde = s12 * s34 / delta;
  return d;
}

}  // namespace rahman
