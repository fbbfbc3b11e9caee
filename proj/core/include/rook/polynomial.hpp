#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rook/exact.hpp"

namespace rook {

// Dense univariate polynomial over BigInt, coefficients stored lowest power
// first. Canonical form: no trailing zero coefficient; the zero polynomial
// is the empty coefficient list.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  explicit IntPolynomial(const BigInt& constant);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return IntPolynomial(BigInt(1)); }
  static IntPolynomial monomial(const BigInt& coefficient, std::size_t power);

  bool is_zero() const { return coefficients_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const BigInt& coefficient(std::size_t power) const;
  const std::vector<BigInt>& coefficients() const { return coefficients_; }

  IntPolynomial operator-() const;
  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;

  bool operator==(const IntPolynomial&) const = default;

  // Terms highest power first: "x^4 - 12x^3 + 36x^2 - 24x"; "0" when zero.
  std::string to_string() const;

 private:
  void canonicalize();

  std::vector<BigInt> coefficients_;
};

// p^e by binary exponentiation; p^0 = 1.
IntPolynomial pow(const IntPolynomial& p, unsigned exponent);

// The linear functional x^k -> k!, extended by linearity.
BigInt factorial_functional(const IntPolynomial& p);

// p(t + shift), computed exactly.
IntPolynomial taylor_shift(const IntPolynomial& p, const BigInt& shift);

}  // namespace rook
