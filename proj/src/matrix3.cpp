#include "rahman/matrix3.hpp"

namespace rahman {

Matrix3 Matrix3::identity() { return diag(1, 1, 1); }

Matrix3 Matrix3::unit(int i, int j) {
  Matrix3 m;
  m(i, j) = 1;
  return m;
}

Matrix3 Matrix3::diag(const Rational& a, const Rational& b, const Rational& c) {
  Matrix3 m;
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

Matrix3 Matrix3::transpose() const {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = a_[j][i];
  return m;
}

Rational Matrix3::trace() const { return a_[0][0] + a_[1][1] + a_[2][2]; }

bool Matrix3::is_zero() const {
  for (const auto& row : a_)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

Matrix3& Matrix3::operator+=(const Matrix3& rhs) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a_[i][j] += rhs.a_[i][j];
  return *this;
}

Matrix3& Matrix3::operator-=(const Matrix3& rhs) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a_[i][j] -= rhs.a_[i][j];
  return *this;
}

Matrix3& Matrix3::operator*=(const Rational& c) {
  for (auto& row : a_)
    for (auto& x : row) x *= c;
  return *this;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational acc;
      for (int k = 0; k < 3; ++k) acc += a(i, k) * b(k, j);
      m(i, j) = acc;
    }
  return m;
}

Matrix3 Matrix3::operator-() const { return *this * Rational(-1); }

Matrix3 commutator(const Matrix3& a, const Matrix3& b) { return a * b - b * a; }

}  // namespace rahman
