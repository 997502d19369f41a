#pragma once

#include <cstddef>
#include <vector>

#include "rahman/poly3.hpp"
#include "rahman/rational.hpp"

namespace rahman {

/// Dense D x D rational matrix acting on V = degree-N polynomials, rows and
/// columns in lattice order for the given basis. Column j holds the image of
/// the j-th basis monomial.
class ModuleOperator {
 public:
  ModuleOperator(Basis basis, int N);

  static ModuleOperator identity(Basis basis, int N);

  Basis basis() const { return basis_; }
  int degree() const { return N_; }
  std::size_t dim() const { return dim_; }

  Rational& operator()(std::size_t row, std::size_t col) { return a_[row * dim_ + col]; }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return a_[row * dim_ + col];
  }

  ModuleOperator& operator+=(const ModuleOperator& rhs);
  ModuleOperator& operator-=(const ModuleOperator& rhs);
  ModuleOperator& operator*=(const Rational& c);

  friend ModuleOperator operator+(ModuleOperator a, const ModuleOperator& b) { return a += b; }
  friend ModuleOperator operator-(ModuleOperator a, const ModuleOperator& b) { return a -= b; }
  friend ModuleOperator operator*(ModuleOperator a, const Rational& c) { return a *= c; }
  friend ModuleOperator operator*(const Rational& c, ModuleOperator a) { return a *= c; }
  friend ModuleOperator operator*(const ModuleOperator& a, const ModuleOperator& b);

  /// Adds c * identity.
  ModuleOperator shifted(const Rational& c) const;

  Poly3 apply(const Poly3& xi) const;
  std::vector<Rational> apply(const std::vector<Rational>& coords) const;

  bool is_diagonal() const;
  bool is_zero() const;

  friend bool operator==(const ModuleOperator&, const ModuleOperator&) = default;

 private:
  void require_compatible(const ModuleOperator& rhs) const;

  Basis basis_;
  int N_;
  std::size_t dim_;
  std::vector<Rational> a_;
};

/// Coordinates of a degree-N polynomial in lattice order.
std::vector<Rational> coordinates(const Poly3& xi);
Poly3 from_coordinates(Basis basis, int N, const std::vector<Rational>& coords);

}  // namespace rahman
