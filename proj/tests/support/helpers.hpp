#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <string_view>
#include <vector>

#include "rews/state.hpp"
#include "rews/text_format.hpp"

namespace rews {
// Readable gtest failure output.
inline void PrintTo(const Rews& r, std::ostream* os) { *os << format_state(r); }
inline void PrintTo(Sign s, std::ostream* os) { *os << sign_char(s); }
}  // namespace rews

namespace testing_support {

inline rews::Rews S(std::string_view text) { return rews::parse_state(text); }

// Uses std::mt19937_64 so tests do not lean on the library sampler.
inline rews::Rews random_state(std::mt19937_64& gen, unsigned n) {
  rews::RewsBuilder b(n);
  std::bernoulli_distribution coin(0.5);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) b.set(x, coin(gen));
  return std::move(b).build();
}

inline std::vector<unsigned> random_perm(std::mt19937_64& gen, unsigned n) {
  std::vector<unsigned> p(n);
  for (unsigned i = 0; i < n; ++i) p[i] = i + 1;
  std::shuffle(p.begin(), p.end(), gen);
  return p;
}

inline constexpr int kPropertyInstances = 10000;

}  // namespace testing_support
