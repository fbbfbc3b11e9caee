// rookshuffle: exact adjacency statistics of shuffled multiset decks.
//
// Subcommands:
//   prob      exact probability that no two adjacent cards share a value
//   dist      full distribution of the number of equal-value adjacencies
//   rook      rook polynomial (and hit numbers) of a board file
//   poly      closed-form board/adjacency polynomials, optionally powered
//   derange   generalized derangement counts
//   simulate  seeded Monte Carlo cross-check
//   brute     exhaustive small-deck oracle vs the formula
//
// Exit codes: 0 success, 1 usage or parse error, 2 enumeration guard.
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rook/board.hpp"
#include "rook/closed_forms.hpp"
#include "rook/errors.hpp"
#include "rook/exact.hpp"
#include "rook/shuffle.hpp"
#include "rook/simulate.hpp"

namespace {

using nlohmann::json;
using namespace rook;

// exact values are only worth comparing against a simulation when the
// report itself is cheap
constexpr unsigned kExactComparisonLimit = 60;

struct Options {
  std::string deck_spec;
  std::string counts_spec;
  std::string board_path;
  unsigned digits = 12;
  bool as_json = false;
  bool group = false;
  bool words = false;
  bool hits = false;
  bool phi = false;
  int full_n = -1;
  int linear_n = -1;
  unsigned power = 1;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

std::string maybe_group(const std::string& number, bool group) {
  return group ? group_digits(number) : number;
}

json factors_to_json(const TrialDivision& division) {
  json factors = json::array();
  for (const FactorTerm& f : division.factors) {
    factors.push_back({{"prime", f.prime.str()}, {"exponent", f.exponent}});
  }
  return factors;
}

int run_prob(const Options& opt) {
  const DeckComposition deck = DeckComposition::parse(opt.deck_spec);
  const ShuffleReport report = perfect_shuffle_report(deck, opt.digits);

  if (opt.as_json) {
    json out{
        {"deck", deck.to_string()},
        {"cards", deck.total()},
        {"count", report.count.str()},
        {"total", report.total.str()},
        {"probability",
         {{"numerator", numerator(report.probability).str()},
          {"denominator", denominator(report.probability).str()}}},
        {"decimal", report.decimal},
        {"numerator_probable_prime", report.numerator_probable_prime},
        {"denominator_factors", factors_to_json(report.denominator_factors)},
        {"denominator_cofactor", report.denominator_factors.cofactor.str()},
    };
    if (opt.words) out["words"] = perfect_word_count(deck).str();
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "deck: " << deck.to_string() << "\n";
  std::cout << "cards: " << deck.total() << "\n";
  std::cout << "count: " << maybe_group(report.count.str(), opt.group) << "\n";
  if (opt.words) {
    std::cout << "words: " << maybe_group(perfect_word_count(deck).str(), opt.group) << "\n";
  }
  std::cout << "total: " << maybe_group(report.total.str(), opt.group) << "\n";
  std::cout << "probability: "
            << maybe_group(numerator(report.probability).str(), opt.group);
  if (denominator(report.probability) != 1) {
    std::cout << "/" << maybe_group(denominator(report.probability).str(), opt.group);
  }
  std::cout << "\n";
  std::cout << "decimal: " << report.decimal << "\n";
  std::cout << "numerator_probable_prime: "
            << (report.numerator_probable_prime ? "true" : "false") << "\n";
  std::cout << "denominator_factors: " << factor_string(report.denominator_factors.factors)
            << "\n";
  std::cout << "denominator_cofactor: " << report.denominator_factors.cofactor.str() << "\n";
  return 0;
}

void print_distribution_table(const AdjacencyDistribution& distribution, unsigned digits,
                              bool group, bool with_probability) {
  const BigInt total = factorial(distribution.deck.total());
  std::cout << "k  count" << (with_probability ? "  probability" : "") << "\n";
  BigInt sum = 0;
  for (std::size_t k = 0; k < distribution.counts_by_k.size(); ++k) {
    const BigInt& count = distribution.counts_by_k[k];
    sum += count;
    std::cout << k << "  " << maybe_group(count.str(), group);
    if (with_probability) std::cout << "  " << decimal_string(reduce(count, total), digits);
    std::cout << "\n";
  }
  std::cout << "sum  " << maybe_group(sum.str(), group);
  if (with_probability) std::cout << "  " << decimal_string(reduce(sum, total), digits);
  std::cout << "\n";
}

int run_dist(const Options& opt) {
  const DeckComposition deck = DeckComposition::parse(opt.deck_spec);
  const AdjacencyDistribution distribution = adjacency_distribution(deck);
  const BigInt total = factorial(deck.total());

  if (opt.as_json) {
    json rows = json::array();
    BigInt sum = 0;
    for (std::size_t k = 0; k < distribution.counts_by_k.size(); ++k) {
      const BigInt& count = distribution.counts_by_k[k];
      sum += count;
      rows.push_back({{"k", k},
                      {"count", count.str()},
                      {"probability", decimal_string(reduce(count, total), opt.digits)}});
    }
    json out{{"deck", deck.to_string()},
             {"cards", deck.total()},
             {"rows", rows},
             {"total", sum.str()}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "deck: " << deck.to_string() << "\n";
  print_distribution_table(distribution, opt.digits, opt.group, /*with_probability=*/true);
  return 0;
}

int run_rook(const Options& opt) {
  std::ifstream in(opt.board_path);
  if (!in) throw ParseError("cannot open \"" + opt.board_path + "\"");
  const auto parsed = parse_board(in);

  IntPolynomial polynomial;
  HitNumbers hits;
  if (std::holds_alternative<Board>(parsed)) {
    const Board& board = std::get<Board>(parsed);
    polynomial = rook_polynomial(board);
    if (opt.hits) hits = hit_numbers_from_rook(board);
  } else {
    const AdjacencySet& conditions = std::get<AdjacencySet>(parsed);
    polynomial = rook_polynomial(conditions);
    if (opt.hits) {
      // same inversion, applied to the generalized rook numbers
      const int n = conditions.ambient_size();
      std::vector<BigInt> weighted(n + 1);
      for (int j = 0; j <= n; ++j) {
        const BigInt& coeff = polynomial.coefficient(n - j);
        weighted[j] = (j % 2 == 0 ? coeff : -coeff) * factorial(n - j);
      }
      IntPolynomial counting = taylor_shift(IntPolynomial(std::move(weighted)), -1);
      hits = counting.coefficients();
      while (hits.size() > 1 && hits.back() == 0) hits.pop_back();
      if (hits.empty()) hits.push_back(0);
    }
  }

  std::cout << polynomial.to_string() << "\n";
  if (opt.hits) {
    std::cout << "hits:";
    for (const BigInt& h : hits) std::cout << " " << h.str();
    std::cout << "\n";
  }
  return 0;
}

int run_poly(const Options& opt) {
  if ((opt.full_n < 0) == (opt.linear_n < 0)) {
    throw ParseError("pass exactly one of --full N or --linear N");
  }
  const IntPolynomial base = opt.full_n >= 0 ? full_board_poly(opt.full_n)
                                             : full_adjacency_poly(opt.linear_n);
  const IntPolynomial result = opt.power == 1 ? base : pow(base, opt.power);
  std::cout << result.to_string() << "\n";
  if (opt.phi) std::cout << "phi: " << factorial_functional(result).str() << "\n";
  return 0;
}

int run_derange(const Options& opt) {
  const DeckComposition deck = DeckComposition::parse(opt.counts_spec);
  std::cout << generalized_derangement_count(deck).str() << "\n";
  return 0;
}

int run_simulate(const Options& opt) {
  const DeckComposition deck = DeckComposition::parse(opt.deck_spec);
  const SimulationResult result = simulate(deck, opt.trials, opt.seed, opt.workers);
  const BigRat estimate = reduce(result.successes, result.trials);
  const std::string estimate_decimal = decimal_string(estimate, opt.digits);

  std::string exact_decimal;
  double sigma_deviation = -1.0;
  if (deck.total() <= kExactComparisonLimit) {
    const BigRat exact = reduce(perfect_shuffle_count(deck), factorial(deck.total()));
    exact_decimal = decimal_string(exact, opt.digits);
    const double difference = std::abs(result.estimate() - std::stod(decimal_string(exact, 15)));
    if (difference == 0.0) {
      sigma_deviation = 0.0;
    } else if (result.standard_error() > 0.0) {
      sigma_deviation = difference / result.standard_error();
    }
  }

  if (opt.as_json) {
    json out{{"deck", deck.to_string()},   {"trials", result.trials},
             {"successes", result.successes}, {"estimate", estimate_decimal},
             {"stderr", result.standard_error()}, {"seed", result.seed}};
    if (!exact_decimal.empty()) {
      out["exact"] = exact_decimal;
      if (sigma_deviation >= 0.0) out["deviation_sigma"] = sigma_deviation;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "deck: " << deck.to_string() << "\n";
  std::cout << "trials: " << result.trials << "\n";
  std::cout << "successes: " << result.successes << "\n";
  std::cout << "estimate: " << estimate_decimal << "\n";
  std::cout << "stderr: " << result.standard_error() << "\n";
  std::cout << "seed: " << result.seed << "\n";
  if (!exact_decimal.empty()) {
    std::cout << "exact: " << exact_decimal << "\n";
    if (sigma_deviation >= 0.0) std::cout << "deviation_sigma: " << sigma_deviation << "\n";
  }
  return 0;
}

int run_brute(const Options& opt) {
  const DeckComposition deck = DeckComposition::parse(opt.deck_spec);
  const AdjacencyDistribution brute = bruteforce_distribution(deck);
  const AdjacencyDistribution exact = adjacency_distribution(deck);

  std::cout << "deck: " << deck.to_string() << "\n";
  print_distribution_table(brute, opt.digits, opt.group, /*with_probability=*/false);
  const bool agree = brute.counts_by_k == exact.counts_by_k;
  std::cout << "agreement: " << (agree ? "PASS" : "FAIL") << "\n";
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact adjacency statistics of shuffled decks, via rook polynomials"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* prob = app.add_subcommand("prob", "exact perfect-shuffle probability report");
  prob->add_option("--deck", opt.deck_spec, "deck spec: \"13x4\" or \"4,4,4\"")->required();
  prob->add_option("--digits", opt.digits, "fractional digits of the decimal (default 12)");
  prob->add_flag("--json", opt.as_json, "machine-readable output");
  prob->add_flag("--group", opt.group, "thousands separators in exact integers");
  prob->add_flag("--words", opt.words, "also count distinct color words");

  CLI::App* dist = app.add_subcommand("dist", "distribution of equal-value adjacency counts");
  dist->add_option("--deck", opt.deck_spec, "deck spec")->required();
  dist->add_option("--digits", opt.digits, "fractional digits (default 12)");
  dist->add_flag("--json", opt.as_json, "machine-readable output");
  dist->add_flag("--group", opt.group, "thousands separators");

  CLI::App* rook_cmd = app.add_subcommand("rook", "rook polynomial of a board file");
  rook_cmd->add_option("board", opt.board_path, "board or adjacency file")->required();
  rook_cmd->add_flag("--hits", opt.hits, "also print the hit numbers");

  CLI::App* poly = app.add_subcommand("poly", "closed-form polynomials");
  poly->add_option("--full", opt.full_n, "complete n x n board polynomial");
  poly->add_option("--linear", opt.linear_n, "complete adjacency-condition polynomial");
  poly->add_option("--power", opt.power, "raise the polynomial to this power");
  poly->add_flag("--phi", opt.phi, "also apply the factorial functional");

  CLI::App* derange = app.add_subcommand("derange", "generalized derangement count");
  derange->add_option("--counts", opt.counts_spec, "color counts, e.g. \"2,2\"")->required();

  CLI::App* simulate_cmd = app.add_subcommand("simulate", "seeded Monte Carlo estimate");
  simulate_cmd->add_option("--deck", opt.deck_spec, "deck spec")->required();
  simulate_cmd->add_option("--trials", opt.trials, "number of shuffles")
      ->required()
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", opt.seed, "64-bit master seed")->required();
  simulate_cmd->add_option("--workers", opt.workers, "worker threads (result is unaffected)");
  simulate_cmd->add_option("--digits", opt.digits, "fractional digits (default 12)");
  simulate_cmd->add_flag("--json", opt.as_json, "machine-readable output");

  CLI::App* brute = app.add_subcommand("brute", "exhaustive oracle for small decks");
  brute->add_option("--deck", opt.deck_spec, "deck spec, at most 10 cards")->required();
  brute->add_flag("--group", opt.group, "thousands separators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run '" << (argc > 0 ? argv[0] : "rookshuffle") << " --help' for usage\n";
    return 1;
  }

  try {
    if (prob->parsed()) return run_prob(opt);
    if (dist->parsed()) return run_dist(opt);
    if (rook_cmd->parsed()) return run_rook(opt);
    if (poly->parsed()) return run_poly(opt);
    if (derange->parsed()) return run_derange(opt);
    if (simulate_cmd->parsed()) return run_simulate(opt);
    if (brute->parsed()) return run_brute(opt);
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
