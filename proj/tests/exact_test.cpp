#include "rook/exact.hpp"

#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"

using namespace rook;

namespace {

// 52-card deck: the count of arrangements and the reduced probability of an
// adjacency-free shuffle, used as big fixed points across the suite.
const char* kCount52 =
    "3668033946384704437729512814619767610579526911188666362431432294400";
const char* kNumerator = "672058204939482014438623912695190927357";
const char* kDenominator = "14778213400262135041705388361938994140625";

}  // namespace

TEST_CASE("factorial basics") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(4) == 24);
  CHECK(factorial(52) ==
        BigInt("80658175170943878571660636856403766975289505440883277824000000000000"));
}

TEST_CASE("factorial matches 128-bit iterative product up to 20") {
  unsigned __int128 product = 1;
  for (unsigned n = 1; n <= 20; ++n) {
    product *= n;
    BigInt expected = 0;
    // fold the 128-bit value into a BigInt 32 bits at a time
    unsigned __int128 rest = product;
    int shift = 0;
    while (rest != 0) {
      expected += BigInt(static_cast<std::uint32_t>(rest & 0xffffffffu)) << shift;
      rest >>= 32;
      shift += 32;
    }
    CHECK(factorial(n) == expected);
  }
}

TEST_CASE("binomial basics and edge cases") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(13, 2) == 78);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(52, 26) == BigInt("495918532948104"));
}

TEST_CASE("binomial satisfies the Pascal identity") {
  for (unsigned n = 2; n <= 30; ++n) {
    for (long long k = 1; k < n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("reduce normalizes sign and gcd") {
  BigRat third = reduce(8, 24);
  CHECK(numerator(third) == 1);
  CHECK(denominator(third) == 3);

  BigRat half = reduce(-2, -4);
  CHECK(numerator(half) == 1);
  CHECK(denominator(half) == 2);

  BigRat negative = reduce(2, -4);
  CHECK(numerator(negative) == -1);
  CHECK(denominator(negative) == 2);

  CHECK_THROWS_AS(reduce(1, 0), std::domain_error);
}

TEST_CASE("reduce of the 52-card count against 52! gives the known fraction") {
  BigRat p = reduce(BigInt(kCount52), factorial(52));
  CHECK(numerator(p) == BigInt(kNumerator));
  CHECK(denominator(p) == BigInt(kDenominator));
}

TEST_CASE("reduce is idempotent and scale invariant") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> dist(-50, 50);
  for (int i = 0; i < 200; ++i) {
    int a = dist(gen), b = dist(gen), c = dist(gen);
    if (b == 0 || c == 0) continue;
    BigRat q = reduce(a, b);
    BigRat scaled = reduce(BigInt(a) * c, BigInt(b) * c);
    CHECK(q == scaled);
    CHECK(reduce(numerator(q), denominator(q)) == q);
  }
}

TEST_CASE("is_probable_prime on small numbers and the 39-digit numerator") {
  CHECK(is_probable_prime(47));
  CHECK_FALSE(is_probable_prime(48));
  CHECK_FALSE(is_probable_prime(0));
  CHECK_FALSE(is_probable_prime(1));
  CHECK(is_probable_prime(2));
  CHECK(is_probable_prime(BigInt(kNumerator)));
  // a 39-digit composite: numerator + 2 is divisible by small primes? make
  // one by squaring a prime instead
  BigInt p("18446744073709551629");  // first prime above 2^64
  CHECK(is_probable_prime(p));
  CHECK_FALSE(is_probable_prime(p * p));
}

TEST_CASE("is_probable_prime agrees with a sieve below 10^6") {
  const int limit = 1000000;
  std::vector<char> composite(limit, 0);
  for (int i = 2; i * 1ll * i < limit; ++i) {
    if (composite[i]) continue;
    for (int j = i * i; j < limit; j += i) composite[j] = 1;
  }
  for (int n = 0; n < limit; ++n) {
    bool expected = n >= 2 && !composite[n];
    if (is_probable_prime(n) != expected) {
      CAPTURE(n);
      CHECK(is_probable_prime(n) == expected);
    }
  }
  CHECK(true);  // reached: full agreement
}

TEST_CASE("trial_division recovers bounded factors") {
  TrialDivision t = trial_division(360, 10);
  CHECK(t.factors == FactorMap{{2, 3}, {3, 2}, {5, 1}});
  CHECK(t.cofactor == 1);

  t = trial_division(97, 10);
  CHECK(t.factors.empty());
  CHECK(t.cofactor == 97);

  t = trial_division(1, 2);
  CHECK(t.factors.empty());
  CHECK(t.cofactor == 1);

  CHECK_THROWS_AS(trial_division(0, 10), std::domain_error);
  CHECK_THROWS_AS(trial_division(10, 1), std::domain_error);
}

TEST_CASE("trial_division of the 52-card denominator to bound 50") {
  TrialDivision t = trial_division(BigInt(kDenominator), 50);
  FactorMap expected{{3, 5},  {5, 10}, {7, 7},  {11, 3}, {13, 3}, {17, 3}, {19, 2},
                     {23, 2}, {29, 1}, {31, 1}, {37, 1}, {41, 1}, {43, 1}, {47, 1}};
  CHECK(t.factors == expected);
  CHECK(t.cofactor == 1);
}

TEST_CASE("trial_division reconstructs its input") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 100; ++i) {
    BigInt n = BigInt(gen() % 1000000000000ull) + 1;
    TrialDivision t = trial_division(n, 1000);
    BigInt product = t.cofactor;
    BigInt last_prime = 1;
    for (const FactorTerm& f : t.factors) {
      CHECK(f.prime > last_prime);
      CHECK(f.exponent >= 1);
      last_prime = f.prime;
      for (unsigned e = 0; e < f.exponent; ++e) product *= f.prime;
    }
    CHECK(product == n);
  }
}

TEST_CASE("decimal_string rounds half to even") {
  CHECK(decimal_string(reduce(1, 3), 4) == "0.3333");
  CHECK(decimal_string(reduce(1, 1), 2) == "1.00");
  CHECK(decimal_string(reduce(1, 8), 2) == "0.12");   // 0.125 -> even
  CHECK(decimal_string(reduce(3, 8), 2) == "0.38");   // 0.375 -> even
  CHECK(decimal_string(reduce(-1, 8), 2) == "-0.12");
  CHECK(decimal_string(reduce(999, 1000), 2) == "1.00");  // carry into units
  CHECK(decimal_string(reduce(7, 2), 0) == "4");          // 3.5 -> even
  CHECK(decimal_string(reduce(5, 2), 0) == "2");
  CHECK(decimal_string(reduce(0, 5), 3) == "0.000");
  CHECK(decimal_string(reduce(-1, 100000), 2) == "0.00");  // no negative zero
}

TEST_CASE("decimal_string prints the known probability to 12 digits") {
  BigRat p = reduce(BigInt(kNumerator), BigInt(kDenominator));
  CHECK(decimal_string(p, 12) == "0.045476282331");
}

TEST_CASE("fraction_string") {
  CHECK(fraction_string(reduce(8, 24)) == "1/3");
  CHECK(fraction_string(reduce(4, 4)) == "1");
  CHECK(fraction_string(reduce(0, 9)) == "0");
  CHECK(fraction_string(reduce(-3, 6)) == "-1/2");
}

TEST_CASE("group_digits") {
  CHECK(group_digits("1234567") == "1,234,567");
  CHECK(group_digits("123") == "123");
  CHECK(group_digits("-1234") == "-1,234");
  CHECK(group_digits("1000.25") == "1,000.25");
  CHECK(group_digits("") == "");
  CHECK(group_digits(kCount52) ==
        "3,668,033,946,384,704,437,729,512,814,619,767,610,579,526,911,188,666,362,431,432,"
        "294,400");
}

TEST_CASE("factor_string") {
  CHECK(factor_string({}) == "1");
  CHECK(factor_string({{2, 3}, {3, 2}, {5, 1}}) == "2^3 * 3^2 * 5");
}
