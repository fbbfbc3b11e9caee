#include "rook/simulate.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

namespace rook {
namespace {

constexpr std::uint64_t kBlockTrials = 1ull << 16;
constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

std::uint64_t block_seed(std::uint64_t master_seed, std::uint64_t block) {
  // b-th output of SplitMix64(master_seed), computed by jumping the state
  return SplitMix64(master_seed + block * kGamma).next();
}

std::vector<int> sorted_colors(const DeckComposition& deck) {
  std::vector<int> colors;
  colors.reserve(deck.total());
  for (std::size_t i = 0; i < deck.counts().size(); ++i) {
    colors.insert(colors.end(), deck.counts()[i], static_cast<int>(i));
  }
  return colors;
}

// One block of trials; the card array starts sorted and persists from trial
// to trial, which is still uniform since every trial reshuffles fully.
std::uint64_t run_block(const DeckComposition& deck, std::uint64_t trials,
                        std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<int> cards = sorted_colors(deck);
  const std::size_t n = cards.size();
  std::uint64_t successes = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    shuffle_cards(cards, rng);
    bool perfect = true;
    for (std::size_t i = 0; i + 1 < n && perfect; ++i) perfect = cards[i] != cards[i + 1];
    successes += perfect;
  }
  return successes;
}

}  // namespace

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t mask = ~0ull >> std::countl_zero(bound - 1);
  while (true) {
    std::uint64_t draw = next() & mask;
    if (draw < bound) return draw;
  }
}

void shuffle_cards(std::span<int> cards, SplitMix64& rng) {
  for (std::size_t i = cards.size(); i-- > 1;) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(i + 1));
    std::swap(cards[i], cards[j]);
  }
}

double SimulationResult::standard_error() const {
  const double p = estimate();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

SimulationResult simulate(const DeckComposition& deck, std::uint64_t trials,
                          std::uint64_t seed, unsigned workers) {
  if (trials == 0) throw std::domain_error("simulate: trials must be >= 1");
  const std::uint64_t blocks = (trials + kBlockTrials - 1) / kBlockTrials;

  auto block_length = [&](std::uint64_t b) {
    return std::min(kBlockTrials, trials - b * kBlockTrials);
  };

  std::uint64_t successes = 0;
  if (workers <= 1 || blocks == 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) {
      successes += run_block(deck, block_length(b), block_seed(seed, b));
    }
  } else {
    std::atomic<std::uint64_t> next_block{0};
    std::atomic<std::uint64_t> total{0};
    auto worker = [&] {
      std::uint64_t mine = 0;
      for (std::uint64_t b = next_block.fetch_add(1); b < blocks; b = next_block.fetch_add(1)) {
        mine += run_block(deck, block_length(b), block_seed(seed, b));
      }
      total.fetch_add(mine);
    };
    std::vector<std::thread> pool;
    const unsigned spawn = std::min<std::uint64_t>(workers, blocks);
    pool.reserve(spawn);
    for (unsigned w = 0; w < spawn; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    successes = total.load();
  }
  return {trials, successes, seed};
}

}  // namespace rook
