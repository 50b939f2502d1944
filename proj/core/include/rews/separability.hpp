#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rews/state.hpp"

namespace rews {

/// A tensor factor living on `qubits`. The local state's first amplitude is
/// always positive (bit 0 clear); its local qubit j is the j-th smallest
/// member of `qubits`.
struct Factor {
  QubitSet qubits;
  Rews state;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// global_sign x (tensor of factors, each placed on its qubits).
struct Factorization {
  std::vector<Factor> factors;
  Sign global_sign = Sign::kPlus;

  /// Rebuilds the n-qubit sign vector. Throws InputError when the factor
  /// qubit sets do not partition 1..n or a factor is not sign-normalized.
  Rews reconstruct(unsigned n) const;
  /// e.g. "+ {1}:1:00 (x) {2,3}:2:1000"
  std::string to_string() const;
};

enum class Method : std::uint8_t { kBrute, kFast };

struct SeparabilityReport {
  unsigned delta = 1;
  Factorization witness;
  Method method = Method::kBrute;
};

/// Result of splitting a state across `part` and its complement.
struct Bipartition {
  Factor part;
  Factor rest;
  Sign sign = Sign::kPlus;
};

/// Treats the sign vector as a 2^|S| x 2^(n-|S|) +-1 matrix (rows indexed by
/// the bits of S) and factors it iff the matrix has rank one. Throws
/// InputError unless S is a nonempty proper subset of 1..n.
std::optional<Bipartition> bipartition_factor(const Rews& r, QubitSet s);

/// Exact separable degree by recursive search over all bipartitions
/// containing qubit 1, in ascending mask order, memoized on sub-states for
/// the duration of one call. Requires n <= kMaxAnalysisQubits.
SeparabilityReport separable_degree_brute(const Rews& r);

/// Closed-form shortcut by structural class. Returns nullopt when no closed-form rule covers
/// the state (mid-range even degrees with an odd cofactor, and balanced
/// non-affine states on three or more qubits).
std::optional<SeparabilityReport> separability_fast(const Rews& r);
std::optional<unsigned> separable_degree_fast(const Rews& r);

/// Fast path when it applies, brute force otherwise.
SeparabilityReport separable_degree(const Rews& r);

/// True iff the separable degree is at least k. Throws RangeError unless
/// 1 <= k <= n.
bool is_k_separable(const Rews& r, unsigned k);

struct PeelResult {
  QubitSet peeled;
  // State on the unpeeled qubits; keeps whatever overall sign the input had.
  std::optional<Rews> remainder;
  // Minus only when every qubit peels and the input was the all-minus state.
  Sign sign = Sign::kPlus;

  Factorization as_factorization(unsigned n) const;
};

/// Repeatedly splits off single qubits in the |+> state (ascending qubit
/// order) until none is left. A qubit in |-> is not peeled.
PeelResult peel_constant_qubits(const Rews& r);

/// Writes M or 2^n - M as 2^q (2p + 1).
struct DecompositionParams {
  std::uint64_t degree = 0;  // M
  unsigned q = 0;
  std::uint64_t p = 0;
  bool mirrored = false;  // decomposed 2^n - M instead of M

  std::uint64_t odd_part() const { return 2 * p + 1; }
};

/// Decomposes M when it lies in the lower half (M < 2^(n-1)) and 2^n - M
/// otherwise. Throws DomainError for M in {0, 2^(n-1), 2^n}.
DecompositionParams decompose_degree(unsigned n, std::uint64_t degree);

}  // namespace rews
