#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rook/exact.hpp"
#include "rook/polynomial.hpp"

namespace rook {

// A deck as a multiset of color counts (n_1, ..., n_r), n = sum n_i.
// "Perfect" below always means: no two adjacent cards share a color.
class DeckComposition {
 public:
  explicit DeckComposition(std::vector<unsigned> counts);

  // Accepts "13x4" (13 colors, 4 cards each) or a comma list "4,4,4".
  // Throws ParseError on malformed specs.
  static DeckComposition parse(std::string_view spec);

  const std::vector<unsigned>& counts() const { return counts_; }
  unsigned total() const { return total_; }

  // "13x4" when all counts agree and r > 1, else "4,2,1".
  std::string to_string() const;

 private:
  std::vector<unsigned> counts_;
  unsigned total_;
};

// Number of arrangements of the n labeled cards with no equal-color
// adjacency: the factorial functional applied to the product of the
// full-adjacency polynomials of the color counts. Requires n <= 500.
BigInt perfect_shuffle_count(const DeckComposition& deck);

// perfect_shuffle_count divided by prod n_i!: the count of distinct color
// words with no equal adjacent letters. The division is exact.
BigInt perfect_word_count(const DeckComposition& deck);

// Permutations pi of the n labeled positions with color(i) != color(pi(i))
// for every i: the factorial functional of the product of full-board
// polynomials. Requires n <= 500.
BigInt generalized_derangement_count(const DeckComposition& deck);

struct ShuffleReport {
  DeckComposition deck;
  BigInt count;                   // perfect arrangements of labeled cards
  BigInt total;                   // n!
  BigRat probability;             // count / total, reduced
  std::string decimal;            // probability to `digits` fractional digits
  bool numerator_probable_prime;  // of the reduced numerator
  TrialDivision denominator_factors;  // trial bound max(2, n-1)
};

ShuffleReport perfect_shuffle_report(const DeckComposition& deck, unsigned digits = 12);

// counts_by_k[k] = arrangements of the n labeled cards with exactly k
// equal-color adjacent pairs, k = 0..n-1. Entries sum to n!.
struct AdjacencyDistribution {
  DeckComposition deck;
  std::vector<BigInt> counts_by_k;
};

// Exact distribution read off the product polynomial: its aggregated rook
// numbers R_j weight sum_j R_j (n-j)! t^j, and substituting t -> t - 1
// turns that into the by-k counting polynomial. Requires n <= 500.
AdjacencyDistribution adjacency_distribution(const DeckComposition& deck);

// Exhaustive oracle over all n! labeled arrangements; requires n <= 10.
AdjacencyDistribution bruteforce_distribution(const DeckComposition& deck);

// Exhaustive generalized-derangement oracle; requires n <= 10.
BigInt derangement_bruteforce(const DeckComposition& deck);

}  // namespace rook
