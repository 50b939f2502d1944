#include "rews/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "rews/census.hpp"
#include "rews/sampling.hpp"
#include "rews/separability.hpp"
#include "rews/similarity.hpp"
#include "rews/text_format.hpp"

namespace rews {

namespace {

constexpr CheckInfo kChecks[] = {
    {"thm2", "odd structural degree implies fully entangled"},
    {"thm2-pairs", "distinct odd states share no tensor factor"},
    {"cor3", "constant states are fully separable and the +/- pair is (n-1)-identical"},
    {"cor4", "balanced two-qubit states are fully separable and pairwise 1-identical; "
             "2^(n+1) fully separable states"},
    {"lemma1", "factors are valid states; balanced iff some factor is balanced; "
               "fully separable iff affine"},
    {"eq17", "closed-form count of 2-separable balanced states"},
    {"mirror", "negation keeps the separable degree and mirrors the class"},
    {"thm5", "even-low class: (k+1)-separable iff k |+> qubits split off a fully entangled rest"},
    {"cor6", "even-low pairs: similar degree = min separable degree - 1"},
    {"thm7", "even-low mirror: (k+1)-separable iff k |+> qubits split off, block sign minus"},
    {"cor8", "even-low and mirror pairs: similar degree = min separable degree - 1"},
    {"thm9", "even-mid class, degree 2^q: constant-qubit structure"},
    {"thm10", "even-mid class, odd cofactor: constant-block constructions reach the degree"},
    {"thm11", "generic two-factor products in the lower half are even-mid"},
    {"thm12", "even-mid mirror, gap 2^q: constant-qubit structure, block sign minus"},
    {"thm13", "even-mid mirror, odd cofactor: minus-block constructions reach the degree"},
    {"thm14", "generic two-factor products in the upper half are even-mid mirror"},
    {"max-delta", "largest separable degree is ceil(n/2) in classes D/E and n-1 in F/G"},
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::string show(const Rews& r) { return format_state(r); }

class Context {
 public:
  Context(unsigned n, const VerifyOptions& options) : n_(n), options_(options) {}

  unsigned n() const { return n_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_; }
  std::uint64_t half() const { return dim() / 2; }
  std::uint64_t samples() const { return options_.samples; }
  bool exhaustive() const { return n_ <= kMaxEnumerationQubits; }

  std::uint64_t seed(std::string_view id) const { return CounterRng(options_.seed).at(fnv1a(id)); }

  unsigned delta(const Rews& r) {
    if (exhaustive() && r.qubits() == n_) return deltas()[r.to_integer()];
    return separable_degree_brute(r).delta;
  }

  const std::vector<std::uint8_t>& deltas() {
    if (deltas_.empty()) {
      deltas_ = separable_degree_table(n_, DeltaMethod::kBrute, options_.workers);
    }
    return deltas_;
  }

  /// Exhaustive list of states with the given degree.
  const std::vector<Rews>& with_degree(std::uint64_t degree) {
    if (by_degree_.empty()) {
      by_degree_.resize(dim() + 1);
      for_each_state(n_, 0, state_count(n_), [&](const Rews& r) {
        by_degree_[structural_degree(r)].push_back(r);
      });
    }
    return by_degree_.at(degree);
  }

  std::vector<std::uint64_t> degrees_in(std::function<bool(std::uint64_t)> pred) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m <= dim(); ++m) {
      if (pred(m)) out.push_back(m);
    }
    return out;
  }

  StructuralClass cls(std::uint64_t degree) const { return classify_degree(n_, degree); }

 private:
  unsigned n_;
  VerifyOptions options_;
  std::vector<std::uint8_t> deltas_;
  std::vector<std::vector<Rews>> by_degree_;
};

void violation(VerificationRecord& rec, std::string what) { rec.violations.push_back(std::move(what)); }

std::vector<unsigned> random_permutation(unsigned n, const CounterRng& rng, std::uint64_t base) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 1u);
  for (unsigned i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.uniform(base + i, i)]);
  }
  return perm;
}

// A fully entangled state on m qubits with the given degree, found by a
// seeded search; nullopt if none turns up.
std::optional<Rews> fully_entangled_with_degree(unsigned m, std::uint64_t degree,
                                                std::uint64_t seed) {
  if (degree > (std::uint64_t{1} << m)) return std::nullopt;
  for (std::uint64_t i = 0; i < 512; ++i) {
    Rews r = sample_with_degree(m, degree, seed, i);
    if (degree % 2 == 1 || separable_degree_brute(r).delta == 1) return r;
  }
  return std::nullopt;
}

// Structure check shared by the constant-block theorems. For the plus-block
// form the state is |+>^k (x) R with deg R = value / 2^k; for the minus-block
// form it is (-|+>)^k (x) R, i.e. peeling leaves -R.
void check_block_shape(Context& ctx, VerificationRecord& rec, const Rews& r, std::uint64_t value,
                       unsigned q, bool minus_block) {
  const unsigned delta = ctx.delta(r);
  const PeelResult peel = peel_constant_qubits(r);
  const unsigned k = peel.peeled.size();
  std::ostringstream why;
  if (delta > q + 1) {
    why << show(r) << ": delta " << delta << " exceeds q + 1 = " << q + 1;
  } else if (!peel.remainder) {
    why << show(r) << ": every qubit peeled";
  } else if (k + 1 != delta) {
    why << show(r) << ": delta " << delta << " but " << k << " constant qubits split off";
  } else if (k >= 1) {
    const Rews rest = minus_block ? negate(*peel.remainder) : *peel.remainder;
    const std::uint64_t expected = value >> k;
    if (structural_degree(rest) != expected) {
      why << show(r) << ": remainder degree " << structural_degree(rest) << ", expected "
          << expected;
    } else if (separable_degree_brute(rest).delta != 1) {
      why << show(r) << ": remainder is not fully entangled";
    }
  }
  if (!why.str().empty()) violation(rec, why.str());
}

// ---------------------------------------------------------------------------

void check_odd(Context& ctx, VerificationRecord& rec) {
  if (ctx.exhaustive()) {
    for (std::uint64_t m = 1; m <= ctx.dim(); m += 2) {
      for (const auto& r : ctx.with_degree(m)) {
        ++rec.population;
        if (ctx.delta(r) != 1) violation(rec, show(r) + ": odd degree but delta " +
                                                  std::to_string(ctx.delta(r)));
      }
    }
    return;
  }
  const std::uint64_t seed = ctx.seed(rec.id);
  for (std::uint64_t i = 0; i < ctx.samples(); ++i) {
    Rews r = sample_state(ctx.n(), seed, i);
    if (structural_degree(r) % 2 == 0) continue;
    ++rec.population;
    const unsigned d = separable_degree_brute(r).delta;
    if (d != 1) violation(rec, show(r) + ": odd degree but delta " + std::to_string(d));
  }
  rec.note = "sampled";
}

void check_odd_pairs(Context& ctx, VerificationRecord& rec) {
  auto check = [&](const Rews& a, const Rews& b) {
    ++rec.population;
    const auto s = similar_degree(a, b);
    if (s.gamma != 0) {
      violation(rec, show(a) + " vs " + show(b) + ": gamma " + std::to_string(s.gamma));
    }
  };
  if (ctx.n() <= 3) {
    std::vector<Rews> odd;
    for (std::uint64_t m = 1; m <= ctx.dim(); m += 2) {
      const auto& bucket = ctx.with_degree(m);
      odd.insert(odd.end(), bucket.begin(), bucket.end());
    }
    for (const auto& a : odd) {
      for (const auto& b : odd) {
        if (a != b) check(a, b);
      }
    }
    return;
  }
  // Flipping bit 0 of an even state maps uniform states onto uniform odd ones.
  auto odd_sample = [&](std::uint64_t i) {
    Rews r = sample_state(ctx.n(), ctx.seed(rec.id), i);
    if (structural_degree(r) % 2 == 1) return r;
    std::vector<Rews::Word> w(r.words().begin(), r.words().end());
    w[0] ^= 1u;
    return Rews::from_words(r.qubits(), std::move(w));
  };
  for (std::uint64_t i = 0; i < ctx.samples(); ++i) {
    Rews a = odd_sample(2 * i);
    Rews b = odd_sample(2 * i + 1);
    if (a != b) check(a, b);
  }
  rec.note = "sampled pairs";
}

void check_constant(Context& ctx, VerificationRecord& rec) {
  const unsigned n = ctx.n();
  const Rews plus = constant_state(n, Sign::kPlus);
  const Rews minus = constant_state(n, Sign::kMinus);
  for (const Rews* r : {&plus, &minus}) {
    ++rec.population;
    const unsigned d = separable_degree_brute(*r).delta;
    if (d != n) violation(rec, show(*r) + ": delta " + std::to_string(d));
  }
  ++rec.population;
  const auto s = similar_degree(plus, minus);
  if (s.gamma != n - 1) {
    violation(rec, "gamma(+,-) = " + std::to_string(s.gamma) + ", expected " + std::to_string(n - 1));
  } else if (n >= 2 && (!s.part || s.part->factor != constant_state(n - 1, Sign::kPlus))) {
    violation(rec, "identical part of (+,-) is not the all-plus state");
  }
}

void check_balanced_small(Context& ctx, VerificationRecord& rec) {
  const unsigned n = ctx.n();
  rec.formula_value = count_fully_separable_formula(n);
  if (ctx.exhaustive()) {
    BigInt fully = 0;
    for (std::uint64_t v = 0; v < state_count(n); ++v) {
      if (ctx.deltas()[v] == n) ++fully;
    }
    rec.brute_value = fully;
    rec.population += state_count(n);
  } else {
    rec.note = "fully separable count not enumerable at this n";
  }
  if (n != 2) {
    if (rec.note.empty()) rec.note = "two-qubit balanced checks apply at n = 2 only";
    return;
  }
  const auto& balanced = ctx.with_degree(2);
  const Rews minus_qubit = Rews::from_integer(1, 0b10);
  for (const auto& r : balanced) {
    if (ctx.delta(r) != 2) violation(rec, show(r) + ": balanced but delta " +
                                             std::to_string(ctx.delta(r)));
    for (const auto& s : balanced) {
      if (r == s) continue;
      ++rec.population;
      const auto sim = similar_degree(r, s);
      const auto parts = identical_parts(r, s, 1);
      const bool has_minus = std::any_of(parts.begin(), parts.end(),
                                         [&](const IdenticalPart& p) { return p.factor == minus_qubit; });
      if (sim.gamma != 1 || !has_minus) {
        violation(rec, show(r) + " vs " + show(s) + ": gamma " + std::to_string(sim.gamma) +
                           (has_minus ? "" : ", no (|0>-|1>) common factor"));
      }
    }
  }
}

void check_lemma(Context& ctx, VerificationRecord& rec) {
  const unsigned n = ctx.n();
  auto check_state = [&](const Rews& r) {
    ++rec.population;
    const SeparabilityReport rep = separable_degree_brute(r);
    try {
      if (rep.witness.reconstruct(n) != r) violation(rec, show(r) + ": witness does not rebuild state");
    } catch (const InputError& e) {
      violation(rec, show(r) + ": invalid witness: " + e.what());
    }
    if (rep.witness.factors.size() != rep.delta) violation(rec, show(r) + ": witness size != delta");
    if (rep.delta >= 2) {
      const bool balanced = structural_degree(r) == ctx.half();
      bool factor_balanced = false;
      for (const auto& f : rep.witness.factors) {
        factor_balanced = factor_balanced || 2 * structural_degree(f.state) == f.state.dimension();
      }
      if (balanced != factor_balanced) {
        violation(rec, show(r) + ": balanced=" + std::to_string(balanced) +
                           " but balanced factor=" + std::to_string(factor_balanced));
      }
    }
    const bool affine = affine_test(r).has_value();
    if ((rep.delta == n) != affine) {
      violation(rec, show(r) + ": delta " + std::to_string(rep.delta) +
                         (affine ? " for an affine state" : " = n for a non-affine state"));
    }
  };
  if (ctx.exhaustive()) {
    for_each_state(n, 0, state_count(n), check_state);
    return;
  }
  for (std::uint64_t a = 0; a < ctx.dim(); ++a) {
    check_state(from_affine(n, {a, false}));
    check_state(from_affine(n, {a, true}));
  }
  for (std::uint64_t i = 0; i < ctx.samples(); ++i) check_state(sample_state(n, ctx.seed(rec.id), i));
  rec.note = "all affine states plus sampled states";
}

void check_balanced_count(Context& ctx, VerificationRecord& rec) {
  const unsigned n = ctx.n();
  if (n < 2) {
    rec.note = "formula needs n >= 2";
    return;
  }
  rec.formula_value = count_two_separable_balanced_formula(n);
  if (!ctx.exhaustive()) {
    rec.note = "balanced states not enumerable at this n; formula value only";
    return;
  }
  BigInt separable = 0;
  for (const auto& r : ctx.with_degree(ctx.half())) {
    ++rec.population;
    if (ctx.delta(r) >= 2) ++separable;
  }
  rec.brute_value = separable;
  if (rec.match() == false) {
    std::ostringstream note;
    note << "formula " << rec.formula_value->str() << " vs enumeration " << separable.str()
         << " (difference " << BigInt(*rec.formula_value - separable).str() << ")";
    rec.note = note.str();
  }
}

void check_mirror(Context& ctx, VerificationRecord& rec) {
  auto check = [&](const Rews& r) {
    ++rec.population;
    const Rews neg = negate(r);
    const unsigned a = ctx.delta(r);
    const unsigned b = ctx.delta(neg);
    if (a != b) violation(rec, show(r) + ": delta " + std::to_string(a) + " vs negation " + std::to_string(b));
    if (classify(neg) != mirror_class(classify(r))) violation(rec, show(r) + ": class not mirrored");
  };
  if (ctx.exhaustive()) {
    for_each_state(ctx.n(), 0, state_count(ctx.n()), check);
    return;
  }
  for (std::uint64_t i = 0; i < ctx.samples(); ++i) check(sample_state(ctx.n(), ctx.seed(rec.id), i));
  rec.note = "sampled";
}

// thm5 / thm7 / thm9 / thm12.
void check_block_class(Context& ctx, VerificationRecord& rec,
                       const std::function<bool(std::uint64_t)>& qualifies, bool minus_block,
                       bool with_formula) {
  const unsigned n = ctx.n();
  const auto degrees = ctx.degrees_in(qualifies);
  if (degrees.empty()) {
    rec.note = "class empty for n = " + std::to_string(n);
    return;
  }
  const std::uint64_t seed = ctx.seed(rec.id);
  for (std::uint64_t m : degrees) {
    const DecompositionParams params = decompose_degree(n, m);
    const std::uint64_t value = params.mirrored ? ctx.dim() - m : m;

    std::vector<unsigned> seen(params.q + 2, 0);
    if (ctx.exhaustive()) {
      BigInt separable = 0;
      for (const auto& r : ctx.with_degree(m)) {
        ++rec.population;
        check_block_shape(ctx, rec, r, value, params.q, minus_block);
        const unsigned d = ctx.delta(r);
        if (d < seen.size()) ++seen[d];
        if (d >= 2) ++separable;
      }
      for (unsigned k = 0; k <= params.q && k < n; ++k) {
        if (seen[k + 1] == 0) {
          violation(rec, "no state with degree " + std::to_string(m) + " and delta " +
                             std::to_string(k + 1));
        }
      }
      if (with_formula && value == 2) {
        rec.formula_value = count_two_separable_classD_formula(n, 2);
        rec.brute_value = separable;
      }
    } else {
      for (std::uint64_t i = 0; i < ctx.samples(); ++i) {
        ++rec.population;
        check_block_shape(ctx, rec, sample_with_degree(n, m, seed ^ m, i), value, params.q,
                          minus_block);
      }
      if (with_formula && value == 2) rec.formula_value = count_two_separable_classD_formula(n, 2);
    }

    // Constructive existence of every separable degree 1..q+1.
    for (unsigned k = 0; k <= params.q && k < n; ++k) {
      const std::uint64_t rest_degree = value >> k;
      auto rest = fully_entangled_with_degree(n - k, rest_degree, seed + m * 64 + k);
      if (!rest) {
        violation(rec, "no fully entangled " + std::to_string(n - k) + "-qubit state with degree " +
                           std::to_string(rest_degree));
        continue;
      }
      Rews built = k == 0 ? (minus_block ? negate(*rest) : *rest)
                          : tensor(constant_state(k, minus_block ? Sign::kMinus : Sign::kPlus), *rest);
      ++rec.population;
      const unsigned d = separable_degree_brute(built).delta;
      if (structural_degree(built) != m || d != k + 1) {
        violation(rec, show(built) + ": built for degree " + std::to_string(m) + ", delta " +
                           std::to_string(k + 1) + " but got degree " +
                           std::to_string(structural_degree(built)) + ", delta " + std::to_string(d));
      }
    }
  }
  if (!ctx.exhaustive()) rec.note = "sampled states plus constructions";
}

// cor6 / cor8.
void check_pairs(Context& ctx, VerificationRecord& rec,
                 const std::function<bool(std::uint64_t)>& qualifies) {
  const unsigned n = ctx.n();
  const auto degrees = ctx.degrees_in(qualifies);
  if (degrees.empty()) {
    rec.note = "class empty for n = " + std::to_string(n);
    return;
  }
  std::uint64_t prefix_disagree = 0;
  std::uint64_t prefix_violations = 0;
  auto check = [&](const Rews& a, unsigned da, const Rews& b, unsigned db) {
    ++rec.population;
    const unsigned expected = std::min(da, db) - 1;
    const auto s = similar_degree(a, b);
    const unsigned prefix = similar_degree_prefix(a, b);
    if (prefix != s.gamma) ++prefix_disagree;
    if (prefix != expected) ++prefix_violations;
    if (s.gamma != expected) {
      violation(rec, show(a) + " (delta " + std::to_string(da) + ") vs " + show(b) + " (delta " +
                         std::to_string(db) + "): gamma " + std::to_string(s.gamma) +
                         ", expected " + std::to_string(expected));
    }
  };
  if (ctx.exhaustive()) {
    std::vector<std::pair<Rews, unsigned>> states;
    for (std::uint64_t m : degrees) {
      for (const auto& r : ctx.with_degree(m)) states.emplace_back(r, ctx.delta(r));
    }
    for (const auto& [a, da] : states) {
      for (const auto& [b, db] : states) {
        if (a != b) check(a, da, b, db);
      }
    }
  } else {
    const CounterRng rng(ctx.seed(rec.id));
    for (std::uint64_t i = 0; i < ctx.samples(); ++i) {
      const std::uint64_t ma = degrees[rng.uniform(4 * i, degrees.size())];
      const std::uint64_t mb = degrees[rng.uniform(4 * i + 1, degrees.size())];
      Rews a = sample_with_degree(n, ma, ctx.seed(rec.id), 2 * i);
      Rews b = sample_with_degree(n, mb, ctx.seed(rec.id), 2 * i + 1);
      if (a != b) check(a, separable_degree_brute(a).delta, b, separable_degree_brute(b).delta);
    }
  }
  std::ostringstream note;
  note << "qubit-prefix reading: differs from position-free gamma on " << prefix_disagree
       << " pairs, violates the identity on " << prefix_violations << " pairs";
  if (!ctx.exhaustive()) note << "; sampled pairs";
  rec.note = note.str();
}

// thm10 / thm13.
void check_constructions(Context& ctx, VerificationRecord& rec, StructuralClass target,
                         bool minus_block) {
  const unsigned n = ctx.n();
  const auto degrees = ctx.degrees_in([&](std::uint64_t m) {
    if (ctx.cls(m) != target) return false;
    return decompose_degree(n, m).p >= 1;
  });
  if (degrees.empty()) {
    rec.note = "no degree with odd cofactor in this class for n = " + std::to_string(n);
    return;
  }
  const CounterRng rng(ctx.seed(rec.id));
  std::uint64_t counter = 0;
  for (std::uint64_t m : degrees) {
    const DecompositionParams params = decompose_degree(n, m);
    const std::uint64_t value = params.mirrored ? ctx.dim() - m : m;
    for (unsigned k = 1; k <= params.q && k < n; ++k) {
      const Rews rest = sample_with_degree(n - k, value >> k, ctx.seed(rec.id), counter++);
      const Rews block = constant_state(k, minus_block ? Sign::kMinus : Sign::kPlus);
      const Rews prefix = tensor(block, rest);
      const Rews moved = permute_qubits(prefix, random_permutation(n, rng, 64 * counter));
      for (const Rews* r : {&prefix, &moved}) {
        ++rec.population;
        const unsigned d = separable_degree_brute(*r).delta;
        if (structural_degree(*r) != m || d < k + 1) {
          violation(rec, show(*r) + ": expected degree " + std::to_string(m) + " and delta >= " +
                             std::to_string(k + 1) + ", got " +
                             std::to_string(structural_degree(*r)) + " / " + std::to_string(d));
        }
      }
    }
  }
}

// thm11 / thm14: both walk the same product stream and keep their half.
void check_products(Context& ctx, VerificationRecord& rec, bool upper) {
  const unsigned n = ctx.n();
  if (n < 4) {
    rec.note = "needs n >= 4 for two factors of at least two qubits";
    return;
  }
  const std::uint64_t seed = ctx.seed("thm11");
  const CounterRng rng(seed);
  auto generic = [&](unsigned m, std::uint64_t stream) {
    const std::uint64_t dim = std::uint64_t{1} << m;
    for (std::uint64_t j = 0;; ++j) {
      Rews r = sample_state(m, seed ^ stream, j);
      const auto d = structural_degree(r);
      if (d != 0 && d != dim / 2 && d != dim) return r;
    }
  };
  for (std::uint64_t i = 0; i < ctx.samples(); ++i) {
    const unsigned k = 2 + static_cast<unsigned>(rng.uniform(8 * i, n - 3));
    const Rews a = generic(k, CounterRng::mix(2 * i + 1));
    const Rews b = generic(n - k, CounterRng::mix(2 * i + 2));
    const Rews r = permute_qubits(tensor(a, b), random_permutation(n, rng, 8 * i + 1024));
    const std::uint64_t d = structural_degree(r);
    if (upper ? d < ctx.half() + 1 : d > ctx.half()) continue;
    ++rec.population;
    const StructuralClass want = upper ? StructuralClass::kEvenMidMirror : StructuralClass::kEvenMid;
    if (d % 2 != 0 || classify(r) != want) {
      violation(rec, show(r) + ": degree " + std::to_string(d) + " in class " +
                         std::string(class_tag(classify(r))));
    }
  }
  rec.note = "sampled products";
}

void check_max_delta(Context& ctx, VerificationRecord& rec) {
  const unsigned n = ctx.n();
  if (!ctx.exhaustive()) {
    rec.note = "exhaustive only";
    return;
  }
  std::map<StructuralClass, unsigned> best;
  for (std::uint64_t v = 0; v < state_count(n); ++v) {
    const Rews r = Rews::from_integer(n, v);
    const StructuralClass c = classify(r);
    if (c == StructuralClass::kOdd || c == StructuralClass::kConstant ||
        c == StructuralClass::kBalanced) {
      continue;
    }
    ++rec.population;
    best[c] = std::max(best[c], static_cast<unsigned>(ctx.deltas()[v]));
  }
  std::ostringstream note;
  for (const auto& [c, got] : best) {
    const bool low = c == StructuralClass::kEvenLow || c == StructuralClass::kEvenLowMirror;
    const unsigned expected = low ? (n + 1) / 2 : n - 1;
    note << class_letter(c) << " max " << got << " (expected " << expected << "); ";
    if (got != expected) {
      violation(rec, std::string(class_tag(c)) + ": max delta " + std::to_string(got) +
                         ", expected " + std::to_string(expected));
    }
  }
  rec.note = best.empty() ? "classes D-G empty for n = " + std::to_string(n) : note.str();
  if (rec.note.ends_with("; ")) rec.note.resize(rec.note.size() - 2);
}

void run_check(Context& ctx, VerificationRecord& rec) {
  const unsigned n = ctx.n();
  auto in_class = [&](StructuralClass c) {
    return [&ctx, c](std::uint64_t m) { return ctx.cls(m) == c; };
  };
  const std::string& id = rec.id;
  if (id == "thm2") return check_odd(ctx, rec);
  if (id == "thm2-pairs") return check_odd_pairs(ctx, rec);
  if (id == "cor3") return check_constant(ctx, rec);
  if (id == "cor4") return check_balanced_small(ctx, rec);
  if (id == "lemma1") return check_lemma(ctx, rec);
  if (id == "eq17") return check_balanced_count(ctx, rec);
  if (id == "mirror") return check_mirror(ctx, rec);
  if (id == "thm5") return check_block_class(ctx, rec, in_class(StructuralClass::kEvenLow), false, true);
  if (id == "thm7") {
    return check_block_class(ctx, rec, in_class(StructuralClass::kEvenLowMirror), true, true);
  }
  if (id == "cor6") return check_pairs(ctx, rec, in_class(StructuralClass::kEvenLow));
  if (id == "cor8") {
    return check_pairs(ctx, rec, [&ctx](std::uint64_t m) {
      return ctx.cls(m) == StructuralClass::kEvenLow || ctx.cls(m) == StructuralClass::kEvenLowMirror;
    });
  }
  if (id == "thm9") {
    return check_block_class(ctx, rec, [&ctx](std::uint64_t m) {
      return ctx.cls(m) == StructuralClass::kEvenMid && is_power_of_two(m);
    }, false, false);
  }
  if (id == "thm12") {
    return check_block_class(ctx, rec, [&ctx](std::uint64_t m) {
      return ctx.cls(m) == StructuralClass::kEvenMidMirror && is_power_of_two(ctx.dim() - m);
    }, true, false);
  }
  if (id == "thm10") return check_constructions(ctx, rec, StructuralClass::kEvenMid, false);
  if (id == "thm13") return check_constructions(ctx, rec, StructuralClass::kEvenMidMirror, true);
  if (id == "thm11") return check_products(ctx, rec, false);
  if (id == "thm14") return check_products(ctx, rec, true);
  if (id == "max-delta") return check_max_delta(ctx, rec);
  (void)n;
  throw InputError("unknown check id '" + id + "'");
}

}  // namespace

std::span<const CheckInfo> available_checks() { return kChecks; }

bool VerificationReport::failed() const {
  return std::any_of(records.begin(), records.end(),
                     [](const VerificationRecord& r) { return r.failed(); });
}

const VerificationRecord* VerificationReport::find(std::string_view id) const {
  for (const auto& r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

VerificationReport verify_theorems(unsigned n, std::span<const std::string> selection,
                                   const VerifyOptions& options) {
  check_qubits(n, kMaxVerifyQubits, "verify");
  for (const auto& id : selection) {
    const bool known = std::any_of(std::begin(kChecks), std::end(kChecks),
                                   [&](const CheckInfo& c) { return c.id == id; });
    if (!known) throw InputError("unknown check id '" + id + "'");
  }
  Context ctx(n, options);
  VerificationReport report;
  report.n = n;
  report.seed = options.seed;
  for (const auto& info : kChecks) {
    const bool wanted = selection.empty() ||
                        std::find(selection.begin(), selection.end(), info.id) != selection.end();
    if (!wanted) continue;
    VerificationRecord rec;
    rec.id = std::string(info.id);
    rec.description = std::string(info.description);
    run_check(ctx, rec);
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace rews
