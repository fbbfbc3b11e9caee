#pragma once

#include "rook/polynomial.hpp"

namespace rook {

// Rook polynomial of the complete n x n board:
//   sum_{k=0}^{n} (-1)^k C(n,k)^2 k! x^(n-k)
IntPolynomial full_board_poly(unsigned n);

// Rook polynomial of the complete linear-adjacency condition set on [n]
// (every "i immediately followed by j", i != j):
//   sum_{k=0}^{n} (-1)^k C(n,k) C(n-1,k) k! x^(n-k)
IntPolynomial full_adjacency_poly(unsigned n);

}  // namespace rook
