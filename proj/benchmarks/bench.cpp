#include <benchmark/benchmark.h>

#include "rook/board.hpp"
#include "rook/closed_forms.hpp"
#include "rook/shuffle.hpp"
#include "rook/simulate.hpp"

using namespace rook;

static void BM_PerfectShuffleCount52(benchmark::State& state) {
  const DeckComposition deck = DeckComposition::parse("13x4");
  for (auto _ : state) {
    BigInt count = perfect_shuffle_count(deck);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PerfectShuffleCount52);

static void BM_AdjacencyDistribution52(benchmark::State& state) {
  const DeckComposition deck = DeckComposition::parse("13x4");
  for (auto _ : state) {
    AdjacencyDistribution dist = adjacency_distribution(deck);
    benchmark::DoNotOptimize(dist);
  }
}
BENCHMARK(BM_AdjacencyDistribution52);

static void BM_PolynomialPower13(benchmark::State& state) {
  const IntPolynomial base = full_adjacency_poly(4);
  for (auto _ : state) {
    IntPolynomial p = pow(base, 13);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_PolynomialPower13);

static void BM_RookNumbersFullBoard(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Cell> cells;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) cells.push_back({i, j});
  }
  const Board board(n, std::move(cells));
  for (auto _ : state) {
    RookNumbers r = rook_numbers(board);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_RookNumbersFullBoard)->Arg(4)->Arg(5)->Arg(6);

static void BM_BruteforceDistribution8(benchmark::State& state) {
  const DeckComposition deck = DeckComposition::parse("4,4");
  for (auto _ : state) {
    AdjacencyDistribution dist = bruteforce_distribution(deck);
    benchmark::DoNotOptimize(dist);
  }
}
BENCHMARK(BM_BruteforceDistribution8);

static void BM_Simulate52(benchmark::State& state) {
  const DeckComposition deck = DeckComposition::parse("13x4");
  std::uint64_t seed = 1;
  for (auto _ : state) {
    SimulationResult r = simulate(deck, 10000, seed++);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_Simulate52);

BENCHMARK_MAIN();
