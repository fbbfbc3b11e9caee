#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace rook {

// Exact carriers for every quantity in the library. Nothing on the exact
// path ever touches floating point.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);

// C(n, k); zero when k < 0 or k > n.
BigInt binomial(unsigned n, long long k);

// num/den as a reduced fraction with positive denominator.
// Throws std::domain_error when den == 0.
BigRat reduce(const BigInt& num, const BigInt& den);

// Miller-Rabin with fixed prime bases. Below the Sorenson-Webster bound
// (~3.3e24) the first 13 prime bases are a proven deterministic test; above
// it, 64 fixed prime bases are used. Composites always return false.
bool is_probable_prime(const BigInt& n);

struct FactorTerm {
  BigInt prime;
  unsigned exponent = 0;

  bool operator==(const FactorTerm&) const = default;
};

// Prime factors in strictly increasing order, exponents >= 1.
using FactorMap = std::vector<FactorTerm>;

struct TrialDivision {
  FactorMap factors;  // all prime factors <= bound, with multiplicity
  BigInt cofactor;    // n divided by the recovered factors

  bool operator==(const TrialDivision&) const = default;
};

// Requires n >= 1 and bound >= 2.
TrialDivision trial_division(BigInt n, const BigInt& bound);

// Decimal expansion with `digits` fractional digits, rounded half-to-even.
// digits == 0 yields no decimal point.
std::string decimal_string(const BigRat& value, unsigned digits);

// "num/den", or just "num" when the denominator is 1.
std::string fraction_string(const BigRat& value);

// Inserts thousands separators into the integer part: "1234567" -> "1,234,567".
// Sign and any fractional part are preserved untouched.
std::string group_digits(const std::string& number);

// "3^5 * 5^10 * 7^7" style; "1" for an empty factor list.
std::string factor_string(const FactorMap& factors);

}  // namespace rook
