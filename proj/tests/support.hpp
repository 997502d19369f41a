#pragma once

#include <array>
#include <random>
#include <vector>

#include "rahman/params.hpp"
#include "rahman/rational.hpp"

namespace testing {

using rahman::ParameterSet;
using rahman::Rational;

inline ParameterSet P1235() { return {1, 2, 3, 5}; }
inline ParameterSet P2173() { return {2, 1, 7, 3}; }
inline ParameterSet P1m235() { return {1, -2, 3, 5}; }

inline std::vector<ParameterSet> sample_sets() { return {P1235(), P2173(), P1m235()}; }

/// Valid parameter sets with small numerators and denominators, fixed seed.
inline std::vector<ParameterSet> random_sets(int count, unsigned seed = 20240611u) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  std::vector<ParameterSet> out;
  while (static_cast<int>(out.size()) < count) {
    auto draw = [&] { return Rational(num(rng), den(rng)); };
    ParameterSet p{draw(), draw(), draw(), draw()};
    if (!rahman::first_zero_denominator(p)) out.push_back(p);
  }
  return out;
}

/// Rising product written out term by term.
inline Rational rising(const Rational& a, int n) {
  Rational out(1);
  for (int i = 0; i < n; ++i) out *= a + Rational(i);
  return out;
}

inline Rational fact(int n) { return rising(Rational(1), n); }

/// The defining four-fold sum, evaluated from t, u, v, w with no shared code.
inline Rational brute_P(int a, int b, int c, int d, const std::array<Rational, 4>& tuvw, int N) {
  Rational sum;
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j)
      for (int k = 0; i + j + k <= N; ++k)
        for (int l = 0; i + j + k + l <= N; ++l) {
          Rational term = rising(Rational(-a), i + j) * rising(Rational(-b), k + l) *
                          rising(Rational(-c), i + k) * rising(Rational(-d), j + l);
          if (term.is_zero()) continue;
          term *= tuvw[0].pow(i) * tuvw[1].pow(j) * tuvw[2].pow(k) * tuvw[3].pow(l);
          term /= fact(i) * fact(j) * fact(k) * fact(l) * rising(Rational(-N), i + j + k + l);
          sum += term;
        }
  return sum;
}

/// t, u, v, w straight from their defining quotients.
inline std::array<Rational, 4> tuvw_of(const ParameterSet& p) {
  const Rational S = p.p1 + p.p2 + p.p3 + p.p4;
  return {(p.p1 + p.p2) * (p.p1 + p.p3) / (p.p1 * S), (p.p1 + p.p3) * (p.p3 + p.p4) / (p.p3 * S),
          (p.p1 + p.p2) * (p.p2 + p.p4) / (p.p2 * S), (p.p2 + p.p4) * (p.p3 + p.p4) / (p.p4 * S)};
}

}  // namespace testing
