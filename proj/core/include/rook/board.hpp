#pragma once

#include <iosfwd>
#include <variant>
#include <vector>

#include "rook/errors.hpp"
#include "rook/exact.hpp"
#include "rook/polynomial.hpp"

namespace rook {

struct Cell {
  int row = 0;  // 1-based
  int col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A set of cells inside the [n] x [n] grid. Cells mark the positions a
// permutation graph is tested against.
class Board {
 public:
  Board(int ambient_size, std::vector<Cell> cells);

  int ambient_size() const { return ambient_size_; }
  const std::vector<Cell>& cells() const { return cells_; }

 private:
  int ambient_size_;
  std::vector<Cell> cells_;  // sorted, duplicate-free
};

// Ordered conditions "value i is immediately followed by value j" on the
// one-line notation of a permutation of [n]. i != j always.
class AdjacencySet {
 public:
  AdjacencySet(int ambient_size, std::vector<Cell> pairs);

  int ambient_size() const { return ambient_size_; }
  // pair.row = i (predecessor), pair.col = j (successor)
  const std::vector<Cell>& pairs() const { return pairs_; }

 private:
  int ambient_size_;
  std::vector<Cell> pairs_;
};

// Index k = number of placed non-attacking rooks / satisfied conditions.
// Trailing zeros trimmed; entry 0 is always 1.
using RookNumbers = std::vector<BigInt>;

// Index k = number of permutations with exactly k hits; entries sum to n!.
// Trailing zeros trimmed.
using HitNumbers = std::vector<BigInt>;

// r[k] = number of k-subsets of the board with pairwise distinct rows and
// pairwise distinct columns.
RookNumbers rook_numbers(const Board& board);

// Exhaustive count over all n! permutations; requires n <= 10.
HitNumbers hit_numbers_bruteforce(const Board& board);

// Hit numbers recovered from the rook numbers by substituting t -> t - 1
// into sum_j r_j (n-j)! t^j. Agrees with the brute force everywhere.
HitNumbers hit_numbers_from_rook(const Board& board);

// sum_k (-1)^k r_k(B) x^(n-k).
IntPolynomial rook_polynomial(const Board& board);

// True iff the pairs have pairwise distinct predecessors, pairwise distinct
// successors, and form no directed cycle. A cycle such as {(1,2),(2,1)} is
// non-attacking yet unsatisfiable in one-line notation, so it must count as
// incompatible or the alternating sum below goes wrong.
bool is_compatible(const AdjacencySet& conditions);

// sum over compatible subsets A of (-1)^|A| x^(n-|A|), by backtracking over
// the pair list with incompatible prefixes pruned. Requires |pairs| <= 48.
IntPolynomial rook_polynomial(const AdjacencySet& conditions);

// Exhaustive count of permutations of [n] satisfying none of the adjacency
// conditions; requires n <= 10.
BigInt avoiders_bruteforce(const AdjacencySet& conditions);

// Text format, '#' starts a comment:
//   line 1: "n"            (board)   or   "adjacency n"
//   then one "i j" per line, 1-based.
// Throws ParseError with a 1-based line number on malformed input.
std::variant<Board, AdjacencySet> parse_board(std::istream& in);

}  // namespace rook
