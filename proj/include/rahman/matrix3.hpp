#pragma once

#include <array>

#include "rahman/rational.hpp"

namespace rahman {

/// 3x3 rational matrix, rows and columns indexed 0, 1, 2.
class Matrix3 {
 public:
  Matrix3() = default;

  static Matrix3 identity();
  static Matrix3 unit(int i, int j);
  static Matrix3 diag(const Rational& a, const Rational& b, const Rational& c);

  Rational& operator()(int i, int j) { return a_[i][j]; }
  const Rational& operator()(int i, int j) const { return a_[i][j]; }

  Matrix3 transpose() const;
  Rational trace() const;
  bool is_zero() const;

  Matrix3& operator+=(const Matrix3& rhs);
  Matrix3& operator-=(const Matrix3& rhs);
  Matrix3& operator*=(const Rational& c);

  friend Matrix3 operator+(Matrix3 a, const Matrix3& b) { return a += b; }
  friend Matrix3 operator-(Matrix3 a, const Matrix3& b) { return a -= b; }
  friend Matrix3 operator*(Matrix3 a, const Rational& c) { return a *= c; }
  friend Matrix3 operator*(const Rational& c, Matrix3 a) { return a *= c; }
  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
  Matrix3 operator-() const;

  friend bool operator==(const Matrix3&, const Matrix3&) = default;

 private:
  std::array<std::array<Rational, 3>, 3> a_;
};

/// Lie bracket [a, b] = ab - ba.
Matrix3 commutator(const Matrix3& a, const Matrix3& b);

}  // namespace rahman
