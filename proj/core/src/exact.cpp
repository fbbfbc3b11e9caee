#include "rook/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

namespace rook {
namespace {

// First 64 primes, the fixed Miller-Rabin base set.
constexpr unsigned kBases[64] = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
    43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101,
    103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167,
    173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239,
    241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311};

// The first 13 prime bases decide primality exactly below this bound
// (Sorenson & Webster, 2015); the first 12 already cover everything that
// fits in 64 bits.
const BigInt kDeterministicBound("3317044064679887385961981");

bool miller_rabin_witness(const BigInt& n, const BigInt& base, const BigInt& odd_part,
                          unsigned two_exponent) {
  BigInt x = powm(base, odd_part, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < two_exponent; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;  // base witnesses compositeness
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exponent >>= 1;
  }
  return result;
}

// Deterministic for every 64-bit n with the first 12 prime bases.
bool is_prime_u64(std::uint64_t n) {
  for (unsigned base : kBases) {
    if (n == base) return true;
    if (n % base == 0) return false;
  }
  std::uint64_t odd_part = n - 1;
  unsigned two_exponent = 0;
  while ((odd_part & 1) == 0) {
    odd_part >>= 1;
    ++two_exponent;
  }
  for (std::size_t i = 0; i < 12; ++i) {
    std::uint64_t x = powmod_u64(kBases[i], odd_part, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < two_exponent && witness; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

BigInt pow10(unsigned digits) {
  BigInt p = 1;
  for (unsigned i = 0; i < digits; ++i) p *= 10;
  return p;
}

}  // namespace

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(unsigned n, long long k) {
  if (k < 0 || k > static_cast<long long>(n)) return 0;
  unsigned kk = static_cast<unsigned>(k);
  if (kk > n - kk) kk = n - kk;
  BigInt result = 1;
  for (unsigned i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;  // exact: i consecutive integers contain a multiple of i
  }
  return result;
}

BigRat reduce(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("reduce: zero denominator");
  return BigRat(num) / BigRat(den);
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return is_prime_u64(n.convert_to<std::uint64_t>());
  }
  for (unsigned base : kBases) {
    if (n == base) return true;
    if (n % base == 0) return false;
  }
  BigInt odd_part = n - 1;
  unsigned two_exponent = 0;
  while ((odd_part & 1) == 0) {
    odd_part >>= 1;
    ++two_exponent;
  }
  std::size_t rounds = n < kDeterministicBound ? 13 : 64;
  for (std::size_t i = 0; i < rounds; ++i) {
    if (miller_rabin_witness(n, BigInt(kBases[i]), odd_part, two_exponent)) return false;
  }
  return true;
}

TrialDivision trial_division(BigInt n, const BigInt& bound) {
  if (n < 1) throw std::domain_error("trial_division: n must be >= 1");
  if (bound < 2) throw std::domain_error("trial_division: bound must be >= 2");
  TrialDivision result;
  for (BigInt d = 2; d <= bound && n > 1; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned exponent = 0;
    do {
      n /= d;
      ++exponent;
    } while (n % d == 0);
    result.factors.push_back({d, exponent});
  }
  result.cofactor = std::move(n);
  return result;
}

std::string decimal_string(const BigRat& value, unsigned digits) {
  BigInt num = numerator(value);
  const BigInt& den = denominator(value);  // always > 0
  const bool negative = num < 0;
  if (negative) num = -num;

  const BigInt scale = pow10(digits);
  const BigInt scaled = num * scale;
  BigInt q = scaled / den;
  const BigInt twice_rem = (scaled % den) * 2;
  if (twice_rem > den || (twice_rem == den && (q & 1) == 1)) ++q;

  std::string integral = BigInt(q / scale).str();
  std::string out = (negative && q != 0) ? "-" : "";
  out += integral;
  if (digits > 0) {
    std::string frac = BigInt(q % scale).str();
    out += '.';
    out.append(digits - frac.size(), '0');
    out += frac;
  }
  return out;
}

std::string fraction_string(const BigRat& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

std::string group_digits(const std::string& number) {
  std::size_t begin = number.empty() ? 0 : (number[0] == '-' || number[0] == '+') ? 1 : 0;
  std::size_t end = number.find('.');
  if (end == std::string::npos) end = number.size();

  std::string out = number.substr(0, begin);
  std::size_t span = end - begin;
  for (std::size_t i = 0; i < span; ++i) {
    if (i > 0 && (span - i) % 3 == 0) out += ',';
    out += number[begin + i];
  }
  out += number.substr(end);
  return out;
}

std::string factor_string(const FactorMap& factors) {
  if (factors.empty()) return "1";
  std::string out;
  for (const FactorTerm& term : factors) {
    if (!out.empty()) out += " * ";
    out += term.prime.str();
    if (term.exponent > 1) {
      out += '^';
      out += std::to_string(term.exponent);
    }
  }
  return out;
}

}  // namespace rook
