#include "rahman/combinatorics.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "rahman/errors.hpp"

namespace rahman {

Rational pochhammer(const Rational& alpha, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational product(1);
  Rational factor = alpha;
  for (int i = 0; i < n; ++i) {
    if (factor.is_zero()) return Rational(0);
    product *= factor;
    factor += Rational(1);
  }
  return product;
}

Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

Rational multinomial(int N, std::span<const int> parts) {
  const int sum = std::accumulate(parts.begin(), parts.end(), 0);
  if (sum != N) {
    throw PartsMismatch("multinomial: parts sum to " + std::to_string(sum) + ", expected " +
                        std::to_string(N));
  }
  Rational result = factorial(N);
  for (int part : parts) {
    if (part < 0) throw PartsMismatch("multinomial: negative part");
    result /= factorial(part);
  }
  return result;
}

}  // namespace rahman
