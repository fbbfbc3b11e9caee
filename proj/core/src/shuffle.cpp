#include "rook/shuffle.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

#include "rook/closed_forms.hpp"
#include "rook/errors.hpp"

namespace rook {
namespace {

constexpr unsigned kSolverLimit = 500;
constexpr unsigned kEnumerationLimit = 10;
constexpr unsigned long long kDeckCap = 1'000'000;  // parse-time sanity cap on n

unsigned parse_positive(std::string_view token, std::string_view what) {
  unsigned value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || value == 0 || value > kDeckCap) {
    throw ParseError("invalid " + std::string(what) + " \"" + std::string(token) + "\"");
  }
  return value;
}

void check_solver_limit(const DeckComposition& deck) {
  if (deck.total() > kSolverLimit) {
    throw LimitError("deck with " + std::to_string(deck.total()) +
                     " cards exceeds the solver bound " + std::to_string(kSolverLimit));
  }
}

IntPolynomial adjacency_product(const DeckComposition& deck) {
  IntPolynomial product = IntPolynomial::one();
  for (unsigned count : deck.counts()) product = product * full_adjacency_poly(count);
  return product;
}

std::vector<int> color_layout(const DeckComposition& deck) {
  std::vector<int> colors;
  colors.reserve(deck.total());
  for (std::size_t i = 0; i < deck.counts().size(); ++i) {
    colors.insert(colors.end(), deck.counts()[i], static_cast<int>(i));
  }
  return colors;
}

}  // namespace

DeckComposition::DeckComposition(std::vector<unsigned> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw ParseError("deck needs at least one color");
  unsigned long long total = 0;
  for (unsigned c : counts_) {
    if (c == 0) throw ParseError("color counts must be >= 1");
    total += c;
  }
  if (total > kDeckCap) throw ParseError("deck with " + std::to_string(total) + " cards is unreasonably large");
  total_ = static_cast<unsigned>(total);
}

DeckComposition DeckComposition::parse(std::string_view spec) {
  if (spec.empty()) throw ParseError("empty deck spec");
  std::size_t x = spec.find_first_of("xX");
  if (x != std::string_view::npos) {
    if (spec.find_first_of("xX", x + 1) != std::string_view::npos || spec.find(',') != std::string_view::npos) {
      throw ParseError("invalid deck spec \"" + std::string(spec) + "\"");
    }
    unsigned long long colors = parse_positive(spec.substr(0, x), "color count");
    unsigned long long each = parse_positive(spec.substr(x + 1), "cards-per-color");
    if (colors * each > kDeckCap) {
      throw ParseError("deck with " + std::to_string(colors * each) + " cards is unreasonably large");
    }
    return DeckComposition(std::vector<unsigned>(colors, static_cast<unsigned>(each)));
  }
  std::vector<unsigned> counts;
  while (true) {
    std::size_t comma = spec.find(',');
    counts.push_back(parse_positive(spec.substr(0, comma), "color count"));
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
  }
  return DeckComposition(std::move(counts));
}

std::string DeckComposition::to_string() const {
  const bool uniform = counts_.size() > 1 &&
                       std::all_of(counts_.begin(), counts_.end(),
                                   [&](unsigned c) { return c == counts_.front(); });
  if (uniform) {
    return std::to_string(counts_.size()) + "x" + std::to_string(counts_.front());
  }
  std::string out;
  for (unsigned c : counts_) {
    if (!out.empty()) out += ',';
    out += std::to_string(c);
  }
  return out;
}

BigInt perfect_shuffle_count(const DeckComposition& deck) {
  check_solver_limit(deck);
  return factorial_functional(adjacency_product(deck));
}

BigInt perfect_word_count(const DeckComposition& deck) {
  BigInt labelings = 1;
  for (unsigned c : deck.counts()) labelings *= factorial(c);
  return perfect_shuffle_count(deck) / labelings;
}

BigInt generalized_derangement_count(const DeckComposition& deck) {
  check_solver_limit(deck);
  IntPolynomial product = IntPolynomial::one();
  for (unsigned count : deck.counts()) product = product * full_board_poly(count);
  return factorial_functional(product);
}

ShuffleReport perfect_shuffle_report(const DeckComposition& deck, unsigned digits) {
  const unsigned n = deck.total();
  ShuffleReport report{deck,
                       perfect_shuffle_count(deck),
                       factorial(n),
                       0,
                       {},
                       false,
                       {}};
  report.probability = reduce(report.count, report.total);
  report.decimal = decimal_string(report.probability, digits);
  report.numerator_probable_prime = is_probable_prime(numerator(report.probability));
  const BigInt bound = std::max(2u, n - 1);
  report.denominator_factors = trial_division(denominator(report.probability), bound);
  return report;
}

AdjacencyDistribution adjacency_distribution(const DeckComposition& deck) {
  check_solver_limit(deck);
  const unsigned n = deck.total();
  const IntPolynomial product = adjacency_product(deck);

  // coefficient of x^(n-j) is (-1)^j R_j
  std::vector<BigInt> weighted(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    const BigInt& coeff = product.coefficient(n - j);
    weighted[j] = (j % 2 == 0 ? coeff : -coeff) * factorial(n - j);
  }
  IntPolynomial counting = taylor_shift(IntPolynomial(std::move(weighted)), -1);

  // k ranges over the n-1 adjacency slots
  std::vector<BigInt> counts(std::max(n, 1u));
  for (std::size_t k = 0; k < counts.size(); ++k) counts[k] = counting.coefficient(k);
  return {deck, std::move(counts)};
}

AdjacencyDistribution bruteforce_distribution(const DeckComposition& deck) {
  const unsigned n = deck.total();
  if (n > kEnumerationLimit) {
    throw LimitError("deck with " + std::to_string(n) + " cards too large for enumeration (limit " +
                     std::to_string(kEnumerationLimit) + ")");
  }
  const std::vector<int> colors = color_layout(deck);
  std::vector<int> cards(n);
  std::iota(cards.begin(), cards.end(), 0);

  std::vector<BigInt> counts(std::max(n, 1u), 0);
  do {
    unsigned k = 0;
    for (unsigned i = 0; i + 1 < n; ++i) k += colors[cards[i]] == colors[cards[i + 1]];
    ++counts[k];
  } while (std::next_permutation(cards.begin(), cards.end()));
  return {deck, std::move(counts)};
}

BigInt derangement_bruteforce(const DeckComposition& deck) {
  const unsigned n = deck.total();
  if (n > kEnumerationLimit) {
    throw LimitError("deck with " + std::to_string(n) + " cards too large for enumeration (limit " +
                     std::to_string(kEnumerationLimit) + ")");
  }
  const std::vector<int> colors = color_layout(deck);
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);

  BigInt count = 0;
  do {
    bool deranged = true;
    for (unsigned i = 0; i < n && deranged; ++i) deranged = colors[i] != colors[image[i]];
    if (deranged) ++count;
  } while (std::next_permutation(image.begin(), image.end()));
  return count;
}

}  // namespace rook
