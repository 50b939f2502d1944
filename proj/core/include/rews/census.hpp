#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "rews/formulas.hpp"
#include "rews/state.hpp"

namespace rews {

/// Number of states on n qubits, 2^(2^n); requires n <= kMaxEnumerationQubits.
std::uint64_t state_count(unsigned n);

/// All states on n qubits in ascending sign-integer order. Throws RangeError
/// for n > kMaxEnumerationQubits; use sample_random beyond that.
std::vector<Rews> enumerate_all(unsigned n);

/// Calls fn(state) for sign integers in [begin, end).
template <typename Fn>
void for_each_state(unsigned n, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  for (std::uint64_t v = begin; v < end; ++v) fn(Rews::from_integer(n, v));
}

enum class DeltaMethod : std::uint8_t { kBrute, kFastWithFallback };

struct CensusKey {
  std::uint64_t degree = 0;
  StructuralClass cls = StructuralClass::kOdd;
  unsigned delta = 1;

  friend auto operator<=>(const CensusKey&, const CensusKey&) = default;
};

/// State counts keyed by (structural degree, class, separable degree).
struct CensusTable {
  unsigned n = 0;
  std::map<CensusKey, BigInt> rows;

  BigInt total() const;
  BigInt count_degree(std::uint64_t degree) const;
  BigInt count_class(StructuralClass c) const;
  BigInt count_delta(unsigned delta) const;
  /// Adds another partial table over the same n.
  void merge(const CensusTable& other);

  friend bool operator==(const CensusTable&, const CensusTable&) = default;
};

/// Worker count from REWS_WORKERS when set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned default_workers();

/// Full census of all states on n <= kMaxEnumerationQubits qubits, sharded
/// over contiguous sign-integer ranges. workers == 0 means default_workers().
CensusTable census(unsigned n, DeltaMethod method, unsigned workers = 0);

/// Separable degree of every state, indexed by sign integer.
std::vector<std::uint8_t> separable_degree_table(unsigned n, DeltaMethod method,
                                                 unsigned workers = 0);

}  // namespace rews
