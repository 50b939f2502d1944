#pragma once

#include <cstdint>
#include <vector>

#include "rews/state.hpp"

namespace rews {

/// Counter-based generator: output(j) is the j-th SplitMix64 output for a
/// stream keyed by `seed`, i.e. mix(mix(seed) + (j + 1) * 0x9E3779B97F4A7C15)
/// where mix is the SplitMix64 finalizer. Any position can be drawn without
/// generating the ones before it, so shards can split a counter range.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed);
  std::uint64_t at(std::uint64_t counter) const;
  /// Uniform in [0, bound) by rejection on the 64-bit draw at `counter`;
  /// retry t reads the same counter from derive(t).
  std::uint64_t uniform(std::uint64_t counter, std::uint64_t bound) const;
  /// Independent stream derived from this one.
  CounterRng derive(std::uint64_t tag) const;

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t key_;
};

/// State `index` of the stream: uniform over all 2^(2^n) sign vectors.
/// Word w of state i is drawn from counter i * words_per_state + w.
Rews sample_state(unsigned n, std::uint64_t seed, std::uint64_t index);
/// `count` consecutive states 0..count-1 of the stream. Requires n <= 16.
std::vector<Rews> sample_random(unsigned n, std::uint64_t count, std::uint64_t seed);
/// Uniform over states with exactly `degree` minus signs (seeded partial
/// Fisher-Yates over basis indices).
Rews sample_with_degree(unsigned n, std::uint64_t degree, std::uint64_t seed, std::uint64_t index);

}  // namespace rews
