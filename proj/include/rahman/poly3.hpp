#pragma once

#include <map>
#include <string>

#include "rahman/lattice.hpp"
#include "rahman/rational.hpp"

namespace rahman {

/// Which set of variables a polynomial is written in: x, y, z or the
/// R-transformed x~, y~, z~.
enum class Basis { plain, tilde };

const char* to_string(Basis b);

/// Sparse homogeneous polynomial in three variables. Zero coefficients are
/// never stored; every key has total degree `degree()`.
class Poly3 {
 public:
  using Terms = std::map<MultiIndex, Rational, LatticeOrder>;

  Poly3() : Poly3(Basis::plain, 0) {}
  Poly3(Basis basis, int degree) : basis_(basis), degree_(degree) {}

  static Poly3 monomial(Basis basis, const MultiIndex& idx,
                        const Rational& coeff = Rational(1));

  Basis basis() const { return basis_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const MultiIndex& idx) const;

  /// Adds `c` to the coefficient of `idx`. Throws NotHomogeneous on a
  /// degree mismatch.
  void add_term(const MultiIndex& idx, const Rational& c);

  Poly3& operator+=(const Poly3& rhs);
  Poly3& operator-=(const Poly3& rhs);
  Poly3& operator*=(const Rational& c);

  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
  friend Poly3 operator*(Poly3 a, const Rational& c) { return a *= c; }
  friend Poly3 operator*(const Rational& c, Poly3 a) { return a *= c; }
  /// Product in the polynomial algebra; degrees add.
  friend Poly3 operator*(const Poly3& a, const Poly3& b);

  Poly3 pow(int n) const;

  friend bool operator==(const Poly3&, const Poly3&) = default;

  std::string str() const;

 private:
  void require_same_basis(const Poly3& rhs) const;

  Basis basis_;
  int degree_;
  Terms terms_;
};

}  // namespace rahman
