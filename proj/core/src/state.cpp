#include "rews/state.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace rews {

namespace {

std::size_t word_count(unsigned n) {
  return n >= 6 ? (std::size_t{1} << (n - 6)) : 1;
}

Rews::Word tail_mask(unsigned n) {
  return n >= 6 ? ~Rews::Word{0} : ((Rews::Word{1} << (std::uint64_t{1} << n)) - 1);
}

bool parity(std::uint64_t v) { return std::popcount(v) & 1; }

}  // namespace

unsigned QubitSet::size() const { return static_cast<unsigned>(std::popcount(mask)); }

std::vector<unsigned> QubitSet::qubits() const {
  std::vector<unsigned> out;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    out.push_back(static_cast<unsigned>(std::countr_zero(m)) + 1);
  }
  return out;
}

std::uint64_t QubitSet::index_mask(unsigned n) const {
  std::uint64_t out = 0;
  for (unsigned q : qubits()) {
    out |= std::uint64_t{1} << (n - q);
  }
  return out;
}

QubitSet QubitSet::lift(QubitSet local, QubitSet host) {
  const auto members = host.qubits();
  QubitSet out;
  for (unsigned j : local.qubits()) {
    out.mask |= 1u << (members.at(j - 1) - 1);
  }
  return out;
}

std::uint64_t extract_bits(std::uint64_t value, std::uint64_t mask) {
  std::uint64_t out = 0;
  unsigned k = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1, ++k) {
    const auto pos = static_cast<unsigned>(std::countr_zero(m));
    out |= ((value >> pos) & 1u) << k;
  }
  return out;
}

std::uint64_t deposit_bits(std::uint64_t value, std::uint64_t mask) {
  std::uint64_t out = 0;
  unsigned k = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1, ++k) {
    const auto pos = static_cast<unsigned>(std::countr_zero(m));
    out |= ((value >> k) & 1u) << pos;
  }
  return out;
}

std::string_view class_tag(StructuralClass c) {
  switch (c) {
    case StructuralClass::kOdd: return "A_Odd";
    case StructuralClass::kConstant: return "B_Constant";
    case StructuralClass::kBalanced: return "C_Balanced";
    case StructuralClass::kEvenLow: return "D_EvenLow";
    case StructuralClass::kEvenLowMirror: return "E_EvenLowMirror";
    case StructuralClass::kEvenMid: return "F_EvenMid";
    case StructuralClass::kEvenMidMirror: return "G_EvenMidMirror";
  }
  return "?";
}

char class_letter(StructuralClass c) { return class_tag(c).front(); }

StructuralClass mirror_class(StructuralClass c) {
  switch (c) {
    case StructuralClass::kEvenLow: return StructuralClass::kEvenLowMirror;
    case StructuralClass::kEvenLowMirror: return StructuralClass::kEvenLow;
    case StructuralClass::kEvenMid: return StructuralClass::kEvenMidMirror;
    case StructuralClass::kEvenMidMirror: return StructuralClass::kEvenMid;
    default: return c;
  }
}

StructuralClass classify_degree(unsigned n, std::uint64_t degree) {
  if (n < 1 || n > 62) throw RangeError("classify_degree: n must be in [1, 62]");
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (degree > dim) throw RangeError("classify_degree: degree exceeds 2^n");

  __extension__ typedef unsigned __int128 Wide;
  const Wide dim_w = dim;
  const Wide low = static_cast<Wide>(degree) * degree;
  const Wide high = static_cast<Wide>(dim - degree) * (dim - degree);
  const std::uint64_t half = dim / 2;

  // At n = 1 the balanced degree is odd; odd takes precedence.
  if (degree % 2 == 1) return StructuralClass::kOdd;
  if (degree == 0 || degree == dim) return StructuralClass::kConstant;
  if (degree == half) return StructuralClass::kBalanced;
  if (degree >= 2 && low < dim_w) return StructuralClass::kEvenLow;
  if (degree + 2 <= dim && high < dim_w) return StructuralClass::kEvenLowMirror;
  if (low >= dim_w && degree + 2 <= half) return StructuralClass::kEvenMid;
  if (degree >= half + 2 && high >= dim_w) return StructuralClass::kEvenMidMirror;
  throw std::logic_error("classify_degree: degree not covered by any class");
}

// ---------------------------------------------------------------------------

Rews Rews::from_bits(unsigned n, std::span<const std::uint8_t> bits) {
  check_qubits(n, kMaxQubits, "state");
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (bits.size() != dim) {
    std::ostringstream msg;
    msg << "sign vector length mismatch: expected " << dim << " (2^" << n << "), got "
        << bits.size();
    throw InputError(msg.str());
  }
  RewsBuilder b(n);
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (bits[x]) b.set(x);
  }
  return std::move(b).build();
}

Rews Rews::from_words(unsigned n, std::vector<Word> words) {
  check_qubits(n, kMaxQubits, "state");
  if (words.size() != word_count(n)) {
    std::ostringstream msg;
    msg << "word count mismatch: expected " << word_count(n) << ", got " << words.size();
    throw InputError(msg.str());
  }
  words.back() &= tail_mask(n);
  return Rews(n, std::move(words));
}

Rews Rews::from_integer(unsigned n, std::uint64_t value) {
  check_qubits(n, 6, "integer-coded state");
  return Rews(n, {value & tail_mask(n)});
}

std::uint64_t Rews::to_integer() const {
  if (n_ > 6) throw RangeError("to_integer requires n <= 6");
  return words_.front();
}

std::strong_ordering operator<=>(const Rews& a, const Rews& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

RewsBuilder::RewsBuilder(unsigned n) : n_(n) {
  check_qubits(n, kMaxQubits, "state");
  words_.assign(word_count(n), 0);
}

Rews RewsBuilder::build() && {
  words_.back() &= tail_mask(n_);
  return Rews(n_, std::move(words_));
}

std::size_t RewsHash::operator()(const Rews& r) const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ r.qubits();
  for (auto w : r.words()) {
    h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

void check_qubits(unsigned n, unsigned limit, std::string_view what) {
  if (n < 1 || n > limit) {
    std::ostringstream msg;
    msg << what << ": qubit count " << n << " out of range [1, " << limit << "]";
    throw RangeError(msg.str());
  }
}

// ---------------------------------------------------------------------------

Rews constant_state(unsigned n, Sign sign) {
  check_qubits(n, kMaxQubits, "constant_state");
  std::vector<Rews::Word> words(word_count(n), is_minus(sign) ? ~Rews::Word{0} : 0);
  return Rews::from_words(n, std::move(words));
}

Rews from_affine(unsigned n, AffineForm form) {
  check_qubits(n, kMaxQubits, "from_affine");
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (form.a >= dim) throw InputError("affine mask has bits beyond n");
  RewsBuilder b(n);
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (parity(form.a & x) != form.c) b.set(x);
  }
  return std::move(b).build();
}

std::uint64_t structural_degree(const Rews& r) {
  std::uint64_t total = 0;
  for (auto w : r.words()) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

Rews negate(const Rews& r) {
  std::vector<Rews::Word> words(r.words().begin(), r.words().end());
  for (auto& w : words) w = ~w;
  return Rews::from_words(r.qubits(), std::move(words));
}

Rews tensor(const Rews& hi, const Rews& lo) {
  const unsigned n = hi.qubits() + lo.qubits();
  check_qubits(n, kMaxQubits, "tensor");
  RewsBuilder b(n);
  const std::uint64_t lo_dim = lo.dimension();
  for (std::uint64_t xh = 0; xh < hi.dimension(); ++xh) {
    const bool h = hi.bit(xh);
    for (std::uint64_t xl = 0; xl < lo_dim; ++xl) {
      if (h != lo.bit(xl)) b.set(xh * lo_dim + xl);
    }
  }
  return std::move(b).build();
}

StructuralClass classify(const Rews& r) {
  return classify_degree(r.qubits(), structural_degree(r));
}

std::optional<AffineForm> affine_test(const Rews& r) {
  const unsigned n = r.qubits();
  AffineForm form;
  form.c = r.bit(0);
  for (unsigned j = 0; j < n; ++j) {
    const std::uint64_t unit = std::uint64_t{1} << j;
    if (r.bit(unit) != form.c) form.a |= unit;
  }
  for (std::uint64_t x = 0; x < r.dimension(); ++x) {
    if (r.bit(x) != (parity(form.a & x) != form.c)) return std::nullopt;
  }
  return form;
}

Rews permute_qubits(const Rews& r, std::span<const unsigned> perm) {
  const unsigned n = r.qubits();
  if (perm.size() != n) throw InputError("permutation size must equal qubit count");
  std::uint32_t seen = 0;
  for (unsigned p : perm) {
    if (p < 1 || p > n || ((seen >> (p - 1)) & 1u)) {
      throw InputError("permutation is not a bijection on 1..n");
    }
    seen |= 1u << (p - 1);
  }
  RewsBuilder b(n);
  for (std::uint64_t x = 0; x < r.dimension(); ++x) {
    if (!r.bit(x)) continue;
    std::uint64_t y = 0;
    for (unsigned i = 1; i <= n; ++i) {
      if ((x >> (n - i)) & 1u) y |= std::uint64_t{1} << (n - perm[i - 1]);
    }
    b.set(y);
  }
  return std::move(b).build();
}

Rews restrict_to(const Rews& r, QubitSet part, std::uint64_t anchor) {
  const unsigned n = r.qubits();
  const unsigned k = part.size();
  check_qubits(k, kMaxQubits, "restrict_to");
  const std::uint64_t mask = part.index_mask(n);
  const std::uint64_t base = anchor & ~mask;
  RewsBuilder b(k);
  for (std::uint64_t l = 0; l < (std::uint64_t{1} << k); ++l) {
    if (r.bit(base | deposit_bits(l, mask))) b.set(l);
  }
  return std::move(b).build();
}

Normalized normalize(const Rews& r) {
  if (r.bit(0)) return {negate(r), Sign::kMinus};
  return {r, Sign::kPlus};
}

}  // namespace rews
