#include "rews/sampling.hpp"

#include <numeric>

namespace rews {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t words_per_state(unsigned n) {
  return n >= 6 ? (std::uint64_t{1} << (n - 6)) : 1;
}

}  // namespace

std::uint64_t CounterRng::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

CounterRng::CounterRng(std::uint64_t seed) : key_(mix(seed)) {}

std::uint64_t CounterRng::at(std::uint64_t counter) const {
  return mix(key_ + (counter + 1) * kGamma);
}

std::uint64_t CounterRng::uniform(std::uint64_t counter, std::uint64_t bound) const {
  if (bound <= 1) return 0;
  // Largest multiple of bound that fits; draws at or above it are rejected.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (std::uint64_t v = at(counter), attempt = 1; ; v = derive(attempt++).at(counter)) {
    if (v < limit) return v % bound;
  }
}

CounterRng CounterRng::derive(std::uint64_t tag) const {
  CounterRng out(0);
  out.key_ = mix(key_ ^ mix(tag + kGamma));
  return out;
}

Rews sample_state(unsigned n, std::uint64_t seed, std::uint64_t index) {
  check_qubits(n, kMaxAnalysisQubits, "sample_state");
  const CounterRng rng(seed);
  const std::uint64_t wps = words_per_state(n);
  std::vector<Rews::Word> words(wps);
  for (std::uint64_t w = 0; w < wps; ++w) words[w] = rng.at(index * wps + w);
  return Rews::from_words(n, std::move(words));
}

std::vector<Rews> sample_random(unsigned n, std::uint64_t count, std::uint64_t seed) {
  check_qubits(n, kMaxAnalysisQubits, "sample_random");
  std::vector<Rews> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(sample_state(n, seed, i));
  return out;
}

Rews sample_with_degree(unsigned n, std::uint64_t degree, std::uint64_t seed,
                        std::uint64_t index) {
  check_qubits(n, kMaxAnalysisQubits, "sample_with_degree");
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (degree > dim) throw DomainError("degree exceeds 2^n");
  const CounterRng rng = CounterRng(seed).derive(index);
  std::vector<std::uint64_t> slots(dim);
  std::iota(slots.begin(), slots.end(), std::uint64_t{0});
  RewsBuilder b(n);
  for (std::uint64_t i = 0; i < degree; ++i) {
    const std::uint64_t j = i + rng.uniform(i, dim - i);
    std::swap(slots[i], slots[j]);
    b.set(slots[i]);
  }
  return std::move(b).build();
}

}  // namespace rews
