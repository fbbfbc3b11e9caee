#include "rook/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace rook {
namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  canonicalize();
}

IntPolynomial::IntPolynomial(const BigInt& constant) {
  if (constant != 0) coefficients_.push_back(constant);
}

IntPolynomial IntPolynomial::monomial(const BigInt& coefficient, std::size_t power) {
  if (coefficient == 0) return IntPolynomial();
  std::vector<BigInt> c(power + 1);
  c[power] = coefficient;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::canonicalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

const BigInt& IntPolynomial::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : kZero;
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> c(coefficients_);
  for (BigInt& x : c) x = -x;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<BigInt> c(std::max(coefficients_.size(), rhs.coefficients_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficient(i) + rhs.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<BigInt> c(std::max(coefficients_.size(), rhs.coefficients_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficient(i) - rhs.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPolynomial();
  // Schoolbook convolution; degrees stay small, coefficients do not.
  std::vector<BigInt> c(coefficients_.size() + rhs.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
      c[i + j] += coefficients_[i] * rhs.coefficients_[j];
    }
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t idx = coefficients_.size(); idx-- > 0;) {
    const BigInt& c = coefficients_[idx];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    BigInt magnitude = negative ? BigInt(-c) : c;
    if (magnitude != 1 || idx == 0) out += magnitude.str();
    if (idx >= 1) {
      out += 'x';
      if (idx >= 2) {
        out += '^';
        out += std::to_string(idx);
      }
    }
  }
  return out;
}

IntPolynomial pow(const IntPolynomial& p, unsigned exponent) {
  IntPolynomial result = IntPolynomial::one();
  IntPolynomial square = p;
  while (exponent > 0) {
    if (exponent & 1) result = result * square;
    exponent >>= 1;
    if (exponent > 0) square = square * square;
  }
  return result;
}

BigInt factorial_functional(const IntPolynomial& p) {
  BigInt sum = 0;
  BigInt k_factorial = 1;
  const std::vector<BigInt>& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0) k_factorial *= k;
    sum += c[k] * k_factorial;
  }
  return sum;
}

IntPolynomial taylor_shift(const IntPolynomial& p, const BigInt& shift) {
  // Horner in the polynomial ring: fold in coefficients from the top while
  // multiplying by (t + shift).
  const IntPolynomial t_plus_shift(std::vector<BigInt>{shift, 1});
  IntPolynomial result;
  const std::vector<BigInt>& c = p.coefficients();
  for (std::size_t idx = c.size(); idx-- > 0;) {
    result = result * t_plus_shift + IntPolynomial(c[idx]);
  }
  return result;
}

}  // namespace rook
