#pragma once

#include <span>

#include "rahman/rational.hpp"

namespace rahman {

/// Shifted factorial (alpha)_n = alpha (alpha+1) ... (alpha+n-1); 1 for n = 0.
Rational pochhammer(const Rational& alpha, int n);

Rational factorial(int n);

/// N! / prod(parts!). Throws PartsMismatch unless the parts sum to N.
Rational multinomial(int N, std::span<const int> parts);

}  // namespace rahman
