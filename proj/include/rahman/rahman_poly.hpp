#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rahman/module_operator.hpp"
#include "rahman/params.hpp"
#include "rahman/rational.hpp"

namespace rahman {

/// P(a, b, c, d) at nonnegative integer arguments: the four-fold
/// shifted-factorial sum over i+j+k+l <= N of
///   (-a)_{i+j} (-b)_{k+l} (-c)_{i+k} (-d)_{j+l} t^i u^j v^k w^l
///     / (i! j! k! l! (-N)_{i+j+k+l}).
/// Throws std::out_of_range on a negative argument.
Rational eval_P(int a, int b, int c, int d, const DerivedParams& dp, int N);

/// Polynomial in two variables with exact coefficients, keyed by
/// (degree in first variable, degree in second variable).
class BivariatePoly {
 public:
  using Terms = std::map<std::pair<int, int>, Rational>;

  void add_term(int i, int j, const Rational& c);
  const Terms& terms() const { return terms_; }
  Rational coeff(int i, int j) const;
  int total_degree() const;
  Rational evaluate(const Rational& x, const Rational& y) const;

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  Terms terms_;
};

/// Which argument pair of P stays symbolic.
enum class ArgumentPair { cd, ab };

/// P(m, n, c, d) as a polynomial in (c, d), or P(a, b, m, n) in (a, b).
BivariatePoly as_bivariate(int m, int n, const DerivedParams& dp, int N, ArgumentPair pair);

/// Where the operator arguments go: back = (c, d), front = (a, b).
enum class Slot { front, back };

/// P with one argument pair replaced by commuting operators. Shifted
/// factorials become (-C)(-C+I)...(-C+(n-1)I). Throws NonCommutingOperators.
ModuleOperator eval_P_operator(int m, int n, const ModuleOperator& C, const ModuleOperator& D,
                               const DerivedParams& dp, int N, Slot slot);

/// P on all lattice argument pairs, (a,b) and (c,d) each with sum <= N.
class RahmanTable {
 public:
  RahmanTable(const DerivedParams& dp, int N);

  int degree() const { return N_; }
  /// Throws std::out_of_range outside the lattice.
  const Rational& at(int a, int b, int c, int d) const;
  static bool in_range(int a, int b, int N) { return a >= 0 && b >= 0 && a + b <= N; }

 private:
  std::size_t slot(int a, int b) const;

  int N_;
  std::size_t dim_;
  std::vector<Rational> values_;
};

}  // namespace rahman
