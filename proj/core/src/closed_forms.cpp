#include "rook/closed_forms.hpp"

namespace rook {

IntPolynomial full_board_poly(unsigned n) {
  std::vector<BigInt> coeffs(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    BigInt c = binomial(n, k);
    BigInt term = c * c * factorial(k);
    coeffs[n - k] = (k % 2 == 0) ? term : -term;
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial full_adjacency_poly(unsigned n) {
  std::vector<BigInt> coeffs(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    // C(n-1,k) vanishes for k = n (n >= 1), so the constant term is 0 there
    BigInt term = binomial(n, k) * (n == 0 ? BigInt(k == 0) : binomial(n - 1, k)) * factorial(k);
    coeffs[n - k] = (k % 2 == 0) ? term : -term;
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace rook
