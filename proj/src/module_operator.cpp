#include "rahman/module_operator.hpp"

#include "rahman/errors.hpp"
#include "rahman/lattice.hpp"

namespace rahman {

ModuleOperator::ModuleOperator(Basis basis, int N)
    : basis_(basis), N_(N), dim_(lattice_size(N)), a_(dim_ * dim_) {}

ModuleOperator ModuleOperator::identity(Basis basis, int N) {
  ModuleOperator m(basis, N);
  for (std::size_t i = 0; i < m.dim_; ++i) m(i, i) = 1;
  return m;
}

void ModuleOperator::require_compatible(const ModuleOperator& rhs) const {
  if (basis_ != rhs.basis_) throw BasisMismatch("operators act in different bases");
  if (N_ != rhs.N_) throw DegreeMismatch("operators act on different degrees");
}

ModuleOperator& ModuleOperator::operator+=(const ModuleOperator& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

ModuleOperator& ModuleOperator::operator-=(const ModuleOperator& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
  return *this;
}

ModuleOperator& ModuleOperator::operator*=(const Rational& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

ModuleOperator operator*(const ModuleOperator& a, const ModuleOperator& b) {
  a.require_compatible(b);
  ModuleOperator out(a.basis_, a.N_);
  const std::size_t n = a.dim_;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  return out;
}

ModuleOperator ModuleOperator::shifted(const Rational& c) const {
  ModuleOperator out = *this;
  for (std::size_t i = 0; i < dim_; ++i) out(i, i) += c;
  return out;
}

std::vector<Rational> ModuleOperator::apply(const std::vector<Rational>& coords) const {
  if (coords.size() != dim_) throw DegreeMismatch("coordinate vector has the wrong length");
  std::vector<Rational> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!coords[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * coords[j];
    }
  return out;
}

Poly3 ModuleOperator::apply(const Poly3& xi) const {
  if (xi.basis() != basis_) throw BasisMismatch("operator and polynomial use different bases");
  if (xi.degree() != N_) throw DegreeMismatch("polynomial degree differs from operator degree");
  return from_coordinates(basis_, N_, apply(coordinates(xi)));
}

bool ModuleOperator::is_diagonal() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool ModuleOperator::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Rational> coordinates(const Poly3& xi) {
  std::vector<Rational> out(lattice_size(xi.degree()));
  for (const auto& [idx, c] : xi.terms()) out[lattice_position(idx)] = c;
  return out;
}

Poly3 from_coordinates(Basis basis, int N, const std::vector<Rational>& coords) {
  const auto idx = lattice(N);
  if (coords.size() != idx.size()) throw DegreeMismatch("coordinate vector has the wrong length");
  Poly3 out(basis, N);
  for (std::size_t i = 0; i < idx.size(); ++i) out.add_term(idx[i], coords[i]);
  return out;
}

}  // namespace rahman
