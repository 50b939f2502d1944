#include "rews/separability.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "rews/text_format.hpp"

namespace rews {

namespace {

void check_proper_subset(const Rews& r, QubitSet s) {
  const QubitSet all = QubitSet::full(r.qubits());
  if (s.empty() || (s.mask & ~all.mask) != 0 || s == all) {
    throw InputError("qubit subset " + format_qubits(s) + " is not a nonempty proper subset of 1.." +
                     std::to_string(r.qubits()));
  }
}

// Exact rank-one test on the +-1 matrix: every entry must equal
// row-head xor column-head xor corner. Submasks are walked in ascending
// order so no index tables are needed.
bool is_rank_one(const Rews& r, std::uint64_t row_mask, std::uint64_t col_mask) {
  const bool corner = r.bit(0);
  std::uint64_t xr = 0;
  do {
    xr = (xr - row_mask) & row_mask;
    if (xr == 0) break;
    const bool flip = r.bit(xr) != corner;
    std::uint64_t xc = 0;
    do {
      xc = (xc - col_mask) & col_mask;
      if (r.bit(xr | xc) != (r.bit(xc) != flip)) return false;
    } while (xc != 0);
  } while (true);
  return true;
}

Rews single_qubit(bool minus) { return Rews::from_integer(1, minus ? 0b10 : 0b00); }

using Memo = std::unordered_map<Rews, SeparabilityReport, RewsHash>;

// `state` is sign-normalized; the witness is in its local qubit coordinates.
const SeparabilityReport& solve(const Rews& state, Memo& memo) {
  if (auto it = memo.find(state); it != memo.end()) return it->second;

  const unsigned n = state.qubits();
  SeparabilityReport best;
  best.delta = 1;
  best.witness.factors.push_back({QubitSet::full(n), state});

  const std::uint32_t full = QubitSet::full(n).mask;
  for (std::uint32_t mask = 1; n >= 2 && mask < full; mask += 2) {
    const QubitSet s{mask};
    auto split = bipartition_factor(state, s);
    if (!split) continue;
    // Copies: recursive calls may rehash the memo.
    const SeparabilityReport left = solve(split->part.state, memo);
    const SeparabilityReport right = solve(split->rest.state, memo);
    const unsigned d = left.delta + right.delta;
    if (d <= best.delta) continue;

    best.delta = d;
    best.witness.factors.clear();
    const QubitSet rest = s.complement(n);
    for (const auto& f : left.witness.factors) {
      best.witness.factors.push_back({QubitSet::lift(f.qubits, s), f.state});
    }
    for (const auto& f : right.witness.factors) {
      best.witness.factors.push_back({QubitSet::lift(f.qubits, rest), f.state});
    }
    std::sort(best.witness.factors.begin(), best.witness.factors.end(),
              [](const Factor& a, const Factor& b) {
                return std::countr_zero(a.qubits.mask) < std::countr_zero(b.qubits.mask);
              });
    if (best.delta == n) break;
  }
  return memo.emplace(state, std::move(best)).first->second;
}

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

Factorization whole_state(const Rews& r) {
  const auto norm = normalize(r);
  Factorization f;
  f.factors.push_back({QubitSet::full(r.qubits()), norm.state});
  f.global_sign = norm.sign;
  return f;
}

}  // namespace

// ---------------------------------------------------------------------------

Rews Factorization::reconstruct(unsigned n) const {
  check_qubits(n, kMaxQubits, "reconstruct");
  std::uint32_t covered = 0;
  std::vector<std::uint64_t> masks;
  for (const auto& f : factors) {
    if ((covered & f.qubits.mask) != 0 || f.qubits.empty()) {
      throw InputError("factor qubit sets overlap or are empty");
    }
    if (f.state.qubits() != f.qubits.size()) {
      throw InputError("factor width does not match its qubit set");
    }
    if (f.state.bit(0)) throw InputError("factor is not sign-normalized");
    covered |= f.qubits.mask;
    masks.push_back(f.qubits.index_mask(n));
  }
  if (covered != QubitSet::full(n).mask) {
    throw InputError("factor qubit sets do not cover 1.." + std::to_string(n));
  }
  RewsBuilder b(n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < dim; ++x) {
    bool minus = is_minus(global_sign);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      minus ^= factors[i].state.bit(extract_bits(x, masks[i]));
    }
    if (minus) b.set(x);
  }
  return std::move(b).build();
}

std::string Factorization::to_string() const {
  std::ostringstream out;
  out << sign_char(global_sign);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    out << (i == 0 ? " " : " (x) ") << format_qubits(factors[i].qubits) << ':'
        << format_state(factors[i].state);
  }
  return out.str();
}

std::optional<Bipartition> bipartition_factor(const Rews& r, QubitSet s) {
  check_proper_subset(r, s);
  const unsigned n = r.qubits();
  const QubitSet rest = s.complement(n);
  if (!is_rank_one(r, s.index_mask(n), rest.index_mask(n))) return std::nullopt;

  Bipartition out{
      {s, normalize(restrict_to(r, s)).state},
      {rest, normalize(restrict_to(r, rest)).state},
      sign_of_bit(r.bit(0)),
  };
  return out;
}

SeparabilityReport separable_degree_brute(const Rews& r) {
  check_qubits(r.qubits(), kMaxAnalysisQubits, "separable_degree_brute");
  const auto norm = normalize(r);
  Memo memo;
  SeparabilityReport report = solve(norm.state, memo);
  report.witness.global_sign = norm.sign;
  report.method = Method::kBrute;
  return report;
}

PeelResult peel_constant_qubits(const Rews& r) {
  const unsigned n = r.qubits();
  PeelResult out;
  Rews current = r;
  std::vector<unsigned> remaining;
  for (unsigned q = 1; q <= n; ++q) remaining.push_back(q);

  std::size_t j = 0;
  while (j < remaining.size()) {
    if (remaining.size() == 1) {
      // Single qubit left: |+> or -|+> peels, |-> does not.
      if (current.to_integer() == 0b00 || current.to_integer() == 0b11) {
        out.peeled.mask |= 1u << (remaining[0] - 1);
        out.sign = sign_of_bit(current.bit(0));
        remaining.clear();
      }
      break;
    }
    const auto local = QubitSet::single(static_cast<unsigned>(j) + 1);
    if (auto split = bipartition_factor(current, local);
        split && split->part.state.to_integer() == 0) {
      out.peeled.mask |= 1u << (remaining[j] - 1);
      current = restrict_to(current, split->rest.qubits);
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(j));
    } else {
      ++j;
    }
  }
  if (!remaining.empty()) out.remainder = std::move(current);
  return out;
}

Factorization PeelResult::as_factorization(unsigned n) const {
  Factorization f;
  for (unsigned q : peeled.qubits()) f.factors.push_back({QubitSet::single(q), single_qubit(false)});
  f.global_sign = sign;
  if (remainder) {
    const auto norm = normalize(*remainder);
    f.factors.push_back({peeled.complement(n), norm.state});
    f.global_sign = norm.sign;
  }
  std::sort(f.factors.begin(), f.factors.end(), [](const Factor& a, const Factor& b) {
    return std::countr_zero(a.qubits.mask) < std::countr_zero(b.qubits.mask);
  });
  return f;
}

DecompositionParams decompose_degree(unsigned n, std::uint64_t degree) {
  check_qubits(n, 62, "decompose_degree");
  const std::uint64_t dim = std::uint64_t{1} << n;
  const std::uint64_t half = dim / 2;
  if (degree == 0 || degree == half || degree >= dim) {
    throw DomainError("degree " + std::to_string(degree) +
                      " is constant, balanced or out of range for n = " + std::to_string(n));
  }
  DecompositionParams out;
  out.degree = degree;
  out.mirrored = degree > half;
  const std::uint64_t value = out.mirrored ? dim - degree : degree;
  out.q = static_cast<unsigned>(std::countr_zero(value));
  out.p = ((value >> out.q) - 1) / 2;
  return out;
}

std::optional<SeparabilityReport> separability_fast(const Rews& r) {
  const unsigned n = r.qubits();
  const std::uint64_t degree = structural_degree(r);
  const std::uint64_t dim = r.dimension();
  SeparabilityReport out;
  out.method = Method::kFast;

  if (degree % 2 == 1) {
    out.delta = 1;
    out.witness = whole_state(r);
    return out;
  }
  if (auto form = affine_test(r)) {
    // Covers the constant states and every balanced two-qubit state.
    out.delta = n;
    for (unsigned q = 1; q <= n; ++q) {
      const bool minus = (form->a >> (n - q)) & 1u;
      out.witness.factors.push_back({QubitSet::single(q), single_qubit(minus)});
    }
    out.witness.global_sign = sign_of_bit(form->c);
    return out;
  }

  const StructuralClass cls = classify_degree(n, degree);
  bool covered = cls == StructuralClass::kEvenLow || cls == StructuralClass::kEvenLowMirror;
  if (cls == StructuralClass::kEvenMid) covered = is_power_of_two(degree);
  if (cls == StructuralClass::kEvenMidMirror) covered = is_power_of_two(dim - degree);
  if (!covered) return std::nullopt;

  const DecompositionParams params = decompose_degree(n, degree);
  const PeelResult peel = peel_constant_qubits(r);
  const unsigned k = peel.peeled.size();
  if (!peel.remainder || k > params.q) return std::nullopt;
  out.delta = k + 1;
  out.witness = peel.as_factorization(n);
  return out;
}

std::optional<unsigned> separable_degree_fast(const Rews& r) {
  if (auto report = separability_fast(r)) return report->delta;
  return std::nullopt;
}

SeparabilityReport separable_degree(const Rews& r) {
  if (auto report = separability_fast(r)) return *std::move(report);
  return separable_degree_brute(r);
}

bool is_k_separable(const Rews& r, unsigned k) {
  if (k < 1 || k > r.qubits()) {
    throw RangeError("k = " + std::to_string(k) + " out of range [1, " +
                     std::to_string(r.qubits()) + "]");
  }
  return separable_degree(r).delta >= k;
}

}  // namespace rews
