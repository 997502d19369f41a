#include "rahman/poly3.hpp"

#include <sstream>

#include "rahman/errors.hpp"

namespace rahman {

const char* to_string(Basis b) { return b == Basis::plain ? "plain" : "tilde"; }

Poly3 Poly3::monomial(Basis basis, const MultiIndex& idx, const Rational& coeff) {
  Poly3 p(basis, idx.degree());
  p.add_term(idx, coeff);
  return p;
}

Rational Poly3::coeff(const MultiIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly3::add_term(const MultiIndex& idx, const Rational& c) {
  if (idx.degree() != degree_) {
    throw NotHomogeneous("term " + idx.str() + " in a polynomial of degree " +
                         std::to_string(degree_));
  }
  if (idx.r < 0 || idx.s < 0 || idx.t < 0) throw NotHomogeneous("negative exponent " + idx.str());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly3::require_same_basis(const Poly3& rhs) const {
  if (basis_ != rhs.basis_) throw BasisMismatch("mixing plain and tilde polynomials");
  if (degree_ != rhs.degree_) {
    throw NotHomogeneous("adding polynomials of degree " + std::to_string(degree_) + " and " +
                         std::to_string(rhs.degree_));
  }
}

Poly3& Poly3::operator+=(const Poly3& rhs) {
  require_same_basis(rhs);
  for (const auto& [idx, c] : rhs.terms_) add_term(idx, c);
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& rhs) {
  require_same_basis(rhs);
  for (const auto& [idx, c] : rhs.terms_) add_term(idx, -c);
  return *this;
}

Poly3& Poly3::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, x] : terms_) x *= c;
  return *this;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  if (a.basis_ != b.basis_) throw BasisMismatch("mixing plain and tilde polynomials");
  Poly3 out(a.basis_, a.degree_ + b.degree_);
  for (const auto& [ia, ca] : a.terms_)
    for (const auto& [ib, cb] : b.terms_)
      out.add_term({ia.r + ib.r, ia.s + ib.s, ia.t + ib.t}, ca * cb);
  return out;
}

Poly3 Poly3::pow(int n) const {
  Poly3 out = monomial(basis_, {0, 0, 0});
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

std::string Poly3::str() const {
  if (terms_.empty()) return "0";
  const char* names[3] = {"x", "y", "z"};
  const char* suffix = basis_ == Basis::tilde ? "~" : "";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (int v = 0; v < 3; ++v) {
      if (idx[v] == 0) continue;
      os << '*' << names[v] << suffix;
      if (idx[v] > 1) os << '^' << idx[v];
    }
  }
  return os.str();
}

}  // namespace rahman
