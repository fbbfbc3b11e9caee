#pragma once

#include <cstdint>
#include <span>

#include "rook/shuffle.hpp"

namespace rook {

// splitmix64 (Vigna's reference update function). Pinned so that seeded runs
// are reproducible across platforms and releases; the first outputs from
// seed 0 are 0xe220a8397b1dcdaf, 0x6e789e6aa1b965f4, 0x06c45d188009454f.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, bound) by bitmask rejection; bound >= 1.
  // bound == 1 consumes no output.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// In-place Fisher-Yates, iterating from the back: for i = n-1 down to 1,
// swap position i with next_below(i+1). This loop order is part of the
// reproducibility contract.
void shuffle_cards(std::span<int> cards, SplitMix64& rng);

struct SimulationResult {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;

  double estimate() const {
    return static_cast<double>(successes) / static_cast<double>(trials);
  }
  // sqrt(p(1-p)/trials) with p the observed estimate
  double standard_error() const;
};

// Shuffles a labeled deck `trials` times and counts shuffles with no two
// adjacent cards of equal color. Deterministic in (deck, trials, seed) and
// independent of `workers`: trials are split into fixed 65536-trial blocks
// and block b is driven by its own SplitMix64 seeded with the b-th output
// of SplitMix64(seed); workers only decide who runs which block.
SimulationResult simulate(const DeckComposition& deck, std::uint64_t trials,
                          std::uint64_t seed, unsigned workers = 1);

}  // namespace rook
