#pragma once

#include <optional>
#include <vector>

#include "rews/separability.hpp"
#include "rews/state.hpp"

namespace rews {

/// A common tensor factor of two states, possibly sitting on different
/// qubits in each. The factor is sign-normalized; each remainder carries the
/// leftover sign of its state, so
///   first  == place(factor on host_first,  remainder_first  on the rest)
///   second == place(factor on host_second, remainder_second on the rest).
struct IdenticalPart {
  Rews factor;
  QubitSet host_first;
  QubitSet host_second;
  Rews remainder_first;
  Rews remainder_second;
};

struct SimilarityReport {
  unsigned gamma = 0;
  std::optional<IdenticalPart> part;  // set when 1 <= gamma < n
};

/// First common k-qubit factor in ascending (host_first, host_second) mask
/// order. Throws InputError on dimension mismatch and RangeError unless
/// 1 <= k <= n - 1.
std::optional<IdenticalPart> k_identical(const Rews& psi, const Rews& phi, unsigned k);

/// Every distinct common k-qubit factor, one representative placement each,
/// in order of first discovery.
std::vector<IdenticalPart> identical_parts(const Rews& psi, const Rews& phi, unsigned k);

/// n for equal states (a state and its negation are not equal), otherwise
/// the largest k with a common k-qubit factor, or 0.
SimilarityReport similar_degree(const Rews& psi, const Rews& phi);

/// Same quantity under the literal reading where the shared factor must sit
/// on qubits 1..k of both states. Kept for comparison reports.
unsigned similar_degree_prefix(const Rews& psi, const Rews& phi);

/// Places `factor` on `host` and `remainder` on the other qubits.
Rews place_factor(const Rews& factor, QubitSet host, const Rews& remainder);

}  // namespace rews
