#include "rews/similarity.hpp"

#include <bit>

namespace rews {

namespace {

struct Candidate {
  QubitSet host;
  Rews factor;
  Rews remainder;
};

void check_pair(const Rews& psi, const Rews& phi) {
  if (psi.qubits() != phi.qubits()) {
    throw InputError("similarity needs states on the same number of qubits (" +
                     std::to_string(psi.qubits()) + " vs " + std::to_string(phi.qubits()) + ")");
  }
  check_qubits(psi.qubits(), kMaxAnalysisQubits, "similarity");
}

void check_k(unsigned n, unsigned k) {
  if (k < 1 || k + 1 > n) {
    throw RangeError("k = " + std::to_string(k) + " out of range [1, " + std::to_string(n - 1) +
                     "]");
  }
}

// All k-subsets across which `r` factors, ascending by mask.
std::vector<Candidate> candidates(const Rews& r, unsigned k) {
  std::vector<Candidate> out;
  const unsigned n = r.qubits();
  for (std::uint32_t mask = 1; mask < QubitSet::full(n).mask; ++mask) {
    if (static_cast<unsigned>(std::popcount(mask)) != k) continue;
    const QubitSet s{mask};
    if (auto split = bipartition_factor(r, s)) {
      // The remainder absorbs the overall sign.
      Rews rest = is_minus(split->sign) ? negate(split->rest.state) : split->rest.state;
      out.push_back({s, std::move(split->part.state), std::move(rest)});
    }
  }
  return out;
}

}  // namespace

Rews place_factor(const Rews& factor, QubitSet host, const Rews& remainder) {
  const unsigned n = factor.qubits() + remainder.qubits();
  check_qubits(n, kMaxQubits, "place_factor");
  if (host.size() != factor.qubits() || (host.mask & ~QubitSet::full(n).mask) != 0) {
    throw InputError("host qubit set does not match factor width");
  }
  const std::uint64_t fmask = host.index_mask(n);
  const std::uint64_t rmask = host.complement(n).index_mask(n);
  RewsBuilder b(n);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    if (factor.bit(extract_bits(x, fmask)) != remainder.bit(extract_bits(x, rmask))) b.set(x);
  }
  return std::move(b).build();
}

std::optional<IdenticalPart> k_identical(const Rews& psi, const Rews& phi, unsigned k) {
  check_pair(psi, phi);
  check_k(psi.qubits(), k);
  const auto left = candidates(psi, k);
  if (left.empty()) return std::nullopt;
  const auto right = candidates(phi, k);
  for (const auto& a : left) {
    for (const auto& b : right) {
      if (a.factor == b.factor) {
        return IdenticalPart{a.factor, a.host, b.host, a.remainder, b.remainder};
      }
    }
  }
  return std::nullopt;
}

std::vector<IdenticalPart> identical_parts(const Rews& psi, const Rews& phi, unsigned k) {
  check_pair(psi, phi);
  check_k(psi.qubits(), k);
  std::vector<IdenticalPart> out;
  const auto left = candidates(psi, k);
  const auto right = candidates(phi, k);
  for (const auto& a : left) {
    for (const auto& b : right) {
      if (a.factor != b.factor) continue;
      bool seen = false;
      for (const auto& p : out) seen = seen || p.factor == a.factor;
      if (!seen) out.push_back({a.factor, a.host, b.host, a.remainder, b.remainder});
    }
  }
  return out;
}

SimilarityReport similar_degree(const Rews& psi, const Rews& phi) {
  check_pair(psi, phi);
  const unsigned n = psi.qubits();
  if (psi == phi) return {n, std::nullopt};
  for (unsigned k = n - 1; k >= 1; --k) {
    if (auto part = k_identical(psi, phi, k)) return {k, std::move(part)};
  }
  return {0, std::nullopt};
}

unsigned similar_degree_prefix(const Rews& psi, const Rews& phi) {
  check_pair(psi, phi);
  const unsigned n = psi.qubits();
  if (psi == phi) return n;
  for (unsigned k = n - 1; k >= 1; --k) {
    const QubitSet prefix = QubitSet::full(k);
    auto a = bipartition_factor(psi, prefix);
    if (!a) continue;
    auto b = bipartition_factor(phi, prefix);
    if (b && a->part.state == b->part.state) return k;
  }
  return 0;
}

}  // namespace rews
