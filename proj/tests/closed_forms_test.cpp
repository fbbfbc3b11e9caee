#include "rook/closed_forms.hpp"

#include <numeric>
#include <vector>

#include "rook/board.hpp"
#include "doctest.h"

using namespace rook;

namespace {

IntPolynomial make(std::vector<long long> coeffs) {
  return IntPolynomial(std::vector<BigInt>(coeffs.begin(), coeffs.end()));
}

// permutations of [r] with no fixed point, by enumeration
BigInt derangements_bruteforce(int r) {
  std::vector<int> image(r);
  std::iota(image.begin(), image.end(), 0);
  BigInt count = 0;
  do {
    bool deranged = true;
    for (int i = 0; i < r && deranged; ++i) deranged = image[i] != i;
    if (deranged) ++count;
  } while (std::next_permutation(image.begin(), image.end()));
  return count;
}

}  // namespace

TEST_CASE("full board polynomial, small cases") {
  CHECK(full_board_poly(0) == IntPolynomial::one());
  CHECK(full_board_poly(1) == make({-1, 1}));
  CHECK(full_board_poly(2) == make({2, -4, 1}));
  CHECK(full_board_poly(4) == make({24, -96, 72, -16, 1}));
  CHECK(factorial_functional(full_board_poly(2)) == 0);
  CHECK(factorial_functional(full_board_poly(4)) == 0);
}

TEST_CASE("full adjacency polynomial, small cases") {
  CHECK(full_adjacency_poly(0) == IntPolynomial::one());
  CHECK(full_adjacency_poly(1) == make({0, 1}));
  CHECK(full_adjacency_poly(2) == make({0, -2, 1}));
  CHECK(full_adjacency_poly(4) == make({0, -24, 36, -12, 1}));
}

TEST_CASE("closed forms agree with enumerated boards") {
  for (int n = 0; n <= 6; ++n) {
    std::vector<Cell> cells;
    std::vector<Cell> pairs;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        cells.push_back({i, j});
        if (i != j) pairs.push_back({i, j});
      }
    }
    CHECK(full_board_poly(n) == rook_polynomial(Board(n, std::move(cells))));
    CHECK(full_adjacency_poly(n) == rook_polynomial(AdjacencySet(n, std::move(pairs))));
  }
}

TEST_CASE("powers of the one-element board polynomial count derangements") {
  for (int r = 0; r <= 8; ++r) {
    CHECK(factorial_functional(pow(full_board_poly(1), r)) == derangements_bruteforce(r));
  }
}

TEST_CASE("degree and leading coefficient up to 52") {
  for (unsigned n = 1; n <= 52; ++n) {
    IntPolynomial board = full_board_poly(n);
    IntPolynomial adjacency = full_adjacency_poly(n);
    CHECK(board.degree() == static_cast<int>(n));
    CHECK(adjacency.degree() == static_cast<int>(n));
    CHECK(board.coefficient(n) == 1);
    CHECK(adjacency.coefficient(n) == 1);
  }
}
