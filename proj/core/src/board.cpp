#include "rook/board.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace rook {
namespace {

constexpr int kEnumerationLimit = 10;
constexpr std::size_t kConditionLimit = 48;

void validate_cells(int n, std::vector<Cell>& cells, bool forbid_diagonal) {
  if (n < 0) throw std::invalid_argument("ambient size must be >= 0");
  for (const Cell& c : cells) {
    if (c.row < 1 || c.row > n || c.col < 1 || c.col > n) {
      throw std::invalid_argument("cell (" + std::to_string(c.row) + "," +
                                  std::to_string(c.col) + ") outside [" +
                                  std::to_string(n) + "]x[" + std::to_string(n) + "]");
    }
    if (forbid_diagonal && c.row == c.col) {
      throw std::invalid_argument("adjacency pair (" + std::to_string(c.row) + "," +
                                  std::to_string(c.col) + ") has equal entries");
    }
  }
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
    throw std::invalid_argument("duplicate cell");
  }
}

// Shared backtracking core: count, per size, the selections of cells with
// pairwise distinct rows and columns. `acyclic_only` additionally rejects
// selections whose directed graph row->col closes a cycle, which is the
// compatibility notion for adjacency conditions.
std::vector<BigInt> placement_counts(int n, const std::vector<Cell>& cells,
                                     bool acyclic_only) {
  // Group by row; the recursion advances one row at a time so sibling
  // choices in the same row never collide. Cells arrive sorted by (row, col).
  std::vector<int> group_row;
  std::vector<std::vector<int>> group_cols;
  for (const Cell& c : cells) {
    if (group_row.empty() || group_row.back() != c.row) {
      group_row.push_back(c.row);
      group_cols.emplace_back();
    }
    group_cols.back().push_back(c.col);
  }

  std::vector<BigInt> counts(1, 0);
  std::vector<char> col_used(n + 1, 0);
  // Path bookkeeping for cycle rejection: selected pairs form vertex-disjoint
  // directed paths; chain_head[v] is the head of the path whose tail is v,
  // chain_tail[v] the tail of the path whose head is v (identity when alone).
  std::vector<int> chain_head(n + 1), chain_tail(n + 1);
  std::iota(chain_head.begin(), chain_head.end(), 0);
  std::iota(chain_tail.begin(), chain_tail.end(), 0);

  auto walk = [&](auto&& self, std::size_t group, std::size_t placed) -> void {
    if (group == group_cols.size()) {
      if (counts.size() <= placed) counts.resize(placed + 1, 0);
      ++counts[placed];
      return;
    }
    self(self, group + 1, placed);  // leave this row empty
    const int row = group_row[group];
    for (int col : group_cols[group]) {
      if (col_used[col]) continue;
      if (acyclic_only && chain_head[row] == col) continue;  // would close a cycle
      col_used[col] = 1;
      int head = 0, tail = 0;
      if (acyclic_only) {
        // joining row -> col merges the path ending at row with the one
        // starting at col
        head = chain_head[row];
        tail = chain_tail[col];
        chain_head[tail] = head;
        chain_tail[head] = tail;
      }
      self(self, group + 1, placed + 1);
      if (acyclic_only) {
        chain_head[tail] = col;  // col was the head of tail's path
        chain_tail[head] = row;  // row was the tail of head's path
      }
      col_used[col] = 0;
    }
  };
  walk(walk, 0, 0);

  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

HitNumbers hit_numbers_from_placements(int n, const std::vector<BigInt>& placements) {
  // N(t) = sum_j r_j (n-j)! t^j, then evaluate at t - 1; the coefficient of
  // t^k is the number of permutations with exactly k hits.
  std::vector<BigInt> weighted(placements.size());
  for (std::size_t j = 0; j < placements.size(); ++j) {
    weighted[j] = placements[j] * factorial(static_cast<unsigned>(n - j));
  }
  IntPolynomial counting = taylor_shift(IntPolynomial(std::move(weighted)), -1);
  HitNumbers hits(counting.coefficients());
  if (hits.empty()) hits.push_back(0);
  return hits;
}

IntPolynomial alternating_polynomial(int n, const std::vector<BigInt>& placements) {
  std::vector<BigInt> coeffs(n + 1);
  for (std::size_t k = 0; k < placements.size(); ++k) {
    coeffs[n - k] = (k % 2 == 0) ? placements[k] : -placements[k];
  }
  return IntPolynomial(std::move(coeffs));
}

std::string strip_comment(const std::string& line) {
  std::size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

int parse_int(const std::string& token, int line_number) {
  try {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got \"" + token + "\"", line_number);
  }
}

}  // namespace

Board::Board(int ambient_size, std::vector<Cell> cells)
    : ambient_size_(ambient_size), cells_(std::move(cells)) {
  validate_cells(ambient_size_, cells_, /*forbid_diagonal=*/false);
}

AdjacencySet::AdjacencySet(int ambient_size, std::vector<Cell> pairs)
    : ambient_size_(ambient_size), pairs_(std::move(pairs)) {
  validate_cells(ambient_size_, pairs_, /*forbid_diagonal=*/true);
}

RookNumbers rook_numbers(const Board& board) {
  return placement_counts(board.ambient_size(), board.cells(), /*acyclic_only=*/false);
}

HitNumbers hit_numbers_bruteforce(const Board& board) {
  const int n = board.ambient_size();
  if (n > kEnumerationLimit) {
    throw LimitError("board ambient size " + std::to_string(n) +
                     " too large for enumeration (limit " +
                     std::to_string(kEnumerationLimit) + ")");
  }
  std::vector<char> member(static_cast<std::size_t>(n) * n, 0);
  for (const Cell& c : board.cells()) member[(c.row - 1) * n + (c.col - 1)] = 1;

  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  HitNumbers hits(n + 1, 0);
  do {
    int count = 0;
    for (int i = 0; i < n; ++i) count += member[i * n + image[i]];
    ++hits[count];
  } while (std::next_permutation(image.begin(), image.end()));
  while (hits.size() > 1 && hits.back() == 0) hits.pop_back();
  return hits;
}

HitNumbers hit_numbers_from_rook(const Board& board) {
  return hit_numbers_from_placements(board.ambient_size(), rook_numbers(board));
}

IntPolynomial rook_polynomial(const Board& board) {
  return alternating_polynomial(board.ambient_size(), rook_numbers(board));
}

bool is_compatible(const AdjacencySet& conditions) {
  const int n = conditions.ambient_size();
  std::vector<int> successor(n + 1, 0);
  std::vector<char> has_predecessor(n + 1, 0);
  for (const Cell& p : conditions.pairs()) {
    if (successor[p.row] != 0 || has_predecessor[p.col]) return false;
    successor[p.row] = p.col;
    has_predecessor[p.col] = 1;
  }
  // rows/columns are distinct; any cycle is now a pure successor cycle
  for (const Cell& p : conditions.pairs()) {
    int walk = p.col;
    while (successor[walk] != 0) {
      walk = successor[walk];
      if (walk == p.row) return false;
    }
  }
  return true;
}

IntPolynomial rook_polynomial(const AdjacencySet& conditions) {
  if (conditions.pairs().size() > kConditionLimit) {
    throw LimitError("condition set with " + std::to_string(conditions.pairs().size()) +
                     " pairs too large (limit " + std::to_string(kConditionLimit) + ")");
  }
  std::vector<BigInt> compatible_by_size =
      placement_counts(conditions.ambient_size(), conditions.pairs(), /*acyclic_only=*/true);
  return alternating_polynomial(conditions.ambient_size(), compatible_by_size);
}

BigInt avoiders_bruteforce(const AdjacencySet& conditions) {
  const int n = conditions.ambient_size();
  if (n > kEnumerationLimit) {
    throw LimitError("ambient size " + std::to_string(n) +
                     " too large for enumeration (limit " +
                     std::to_string(kEnumerationLimit) + ")");
  }
  std::vector<char> forbidden(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  for (const Cell& p : conditions.pairs()) forbidden[p.row * (n + 1) + p.col] = 1;

  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  BigInt count = 0;
  do {
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) ok = !forbidden[word[i] * (n + 1) + word[i + 1]];
    if (ok) ++count;
  } while (std::next_permutation(word.begin(), word.end()));
  return count;
}

std::variant<Board, AdjacencySet> parse_board(std::istream& in) {
  std::string line;
  int line_number = 0;
  bool header_seen = false;
  bool adjacency = false;
  int ambient = 0;
  std::vector<Cell> cells;

  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(strip_comment(line));
    std::string first;
    if (!(fields >> first)) continue;  // blank or comment-only line

    if (!header_seen) {
      if (first == "adjacency") {
        adjacency = true;
        if (!(fields >> first)) throw ParseError("expected \"adjacency n\"", line_number);
      }
      ambient = parse_int(first, line_number);
      if (ambient < 0) throw ParseError("ambient size must be >= 0", line_number);
      std::string extra;
      if (fields >> extra) throw ParseError("trailing input \"" + extra + "\"", line_number);
      header_seen = true;
      continue;
    }

    std::string second;
    if (!(fields >> second)) throw ParseError("expected \"i j\"", line_number);
    std::string extra;
    if (fields >> extra) throw ParseError("trailing input \"" + extra + "\"", line_number);
    Cell cell{parse_int(first, line_number), parse_int(second, line_number)};
    if (cell.row < 1 || cell.row > ambient || cell.col < 1 || cell.col > ambient) {
      throw ParseError("entry (" + std::to_string(cell.row) + "," + std::to_string(cell.col) +
                           ") outside [" + std::to_string(ambient) + "]x[" +
                           std::to_string(ambient) + "]",
                       line_number);
    }
    if (adjacency && cell.row == cell.col) {
      throw ParseError("adjacency pair with equal entries", line_number);
    }
    cells.push_back(cell);
  }
  if (!header_seen) throw ParseError("empty input: missing header line");

  try {
    if (adjacency) return AdjacencySet(ambient, std::move(cells));
    return Board(ambient, std::move(cells));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());  // duplicates and the like, no single line to blame
  }
}

}  // namespace rook
