#pragma once

#include "rahman/params.hpp"

namespace rahman::detail {

// Shorthand for the sums that recur in every closed form.
struct Sums {
  Rational p1, p2, p3, p4;
  Rational all;    // p1+p2+p3+p4
  Rational s12, s13, s24, s34;
  Rational delta;  // p2p3 - p1p4
  Rational minus_delta;

  explicit Sums(const ParameterSet& p)
      : p1(p.p1), p2(p.p2), p3(p.p3), p4(p.p4),
        all(p.p1 + p.p2 + p.p3 + p.p4),
        s12(p.p1 + p.p2), s13(p.p1 + p.p3), s24(p.p2 + p.p4), s34(p.p3 + p.p4),
        delta(p.p2 * p.p3 - p.p1 * p.p4), minus_delta(-delta) {}
};

}  // namespace rahman::detail
