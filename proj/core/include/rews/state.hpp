#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rews {

/// Largest qubit count a state may be represented with.
inline constexpr unsigned kMaxQubits = 20;
/// Largest qubit count accepted by separability and similarity analysis.
inline constexpr unsigned kMaxAnalysisQubits = 16;
/// Largest qubit count for exhaustive enumeration of all states.
inline constexpr unsigned kMaxEnumerationQubits = 4;

/// Malformed input: wrong lengths, bad characters, invalid subsets.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size parameter is outside what the library will process.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A numeric argument is outside the domain of a formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Sign : std::int8_t { kPlus = 1, kMinus = -1 };

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::kPlus : Sign::kMinus;
}
constexpr Sign sign_of_bit(bool minus) { return minus ? Sign::kMinus : Sign::kPlus; }
constexpr bool is_minus(Sign s) { return s == Sign::kMinus; }
constexpr char sign_char(Sign s) { return s == Sign::kPlus ? '+' : '-'; }

/// A set of qubits of an n-qubit register. Bit (i - 1) of `mask` stands for
/// qubit i; qubit 1 is the most significant bit of a basis index.
struct QubitSet {
  std::uint32_t mask = 0;

  static constexpr QubitSet full(unsigned n) {
    return QubitSet{n >= 32 ? ~0u : ((1u << n) - 1u)};
  }
  static constexpr QubitSet single(unsigned qubit) { return QubitSet{1u << (qubit - 1)}; }

  constexpr bool contains(unsigned qubit) const { return (mask >> (qubit - 1)) & 1u; }
  constexpr bool empty() const { return mask == 0; }
  unsigned size() const;
  constexpr QubitSet complement(unsigned n) const { return QubitSet{full(n).mask & ~mask}; }
  /// Qubits in ascending order (1-based).
  std::vector<unsigned> qubits() const;
  /// Mask over basis-index bit positions for an n-qubit register.
  std::uint64_t index_mask(unsigned n) const;
  /// Maps a set expressed over the local qubits of `host` (local qubit j is
  /// the j-th smallest member of host) onto the enclosing register.
  static QubitSet lift(QubitSet local, QubitSet host);

  friend constexpr bool operator==(QubitSet, QubitSet) = default;
  friend constexpr auto operator<=>(QubitSet, QubitSet) = default;
};

/// Gathers the bits of `value` selected by `mask` into the low bits of the
/// result, preserving their order.
std::uint64_t extract_bits(std::uint64_t value, std::uint64_t mask);
/// Inverse of extract_bits: scatters low bits of `value` into `mask` positions.
std::uint64_t deposit_bits(std::uint64_t value, std::uint64_t mask);

/// The seven structural classes, keyed by the number of minus amplitudes.
enum class StructuralClass : std::uint8_t {
  kOdd,              // A
  kConstant,         // B
  kBalanced,         // C
  kEvenLow,          // D
  kEvenLowMirror,    // E
  kEvenMid,          // F
  kEvenMidMirror,    // G
};

inline constexpr StructuralClass kAllClasses[] = {
    StructuralClass::kOdd,     StructuralClass::kConstant,      StructuralClass::kBalanced,
    StructuralClass::kEvenLow, StructuralClass::kEvenLowMirror, StructuralClass::kEvenMid,
    StructuralClass::kEvenMidMirror};

/// "A_Odd", "B_Constant", ...
std::string_view class_tag(StructuralClass c);
/// Single letter A..G.
char class_letter(StructuralClass c);
StructuralClass mirror_class(StructuralClass c);

/// Class of any state with `degree` minus signs on n qubits. Valid for
/// 1 <= n <= 62 and degree <= 2^n.
StructuralClass classify_degree(unsigned n, std::uint64_t degree);

/// f(x) = a.x xor c over n input bits; `a` uses the qubit-1-is-MSB layout of
/// a basis index.
struct AffineForm {
  std::uint64_t a = 0;
  bool c = false;

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// An n-qubit real equally weighted state, stored as its sign vector: bit x
/// is set iff the amplitude of basis state |x> is negative.
///
/// Bits are packed little-endian into 64-bit words (bit x lives in word x/64
/// at position x%64). Unused high bits of the last word are always zero.
class Rews {
 public:
  using Word = std::uint64_t;

  /// `bits[x]` nonzero means amplitude of |x> is -1.
  static Rews from_bits(unsigned n, std::span<const std::uint8_t> bits);
  /// Takes ownership of packed words; throws if the word count is wrong.
  static Rews from_words(unsigned n, std::vector<Word> words);
  /// Sign vector read from the low 2^n bits of `value`; requires n <= 6.
  static Rews from_integer(unsigned n, std::uint64_t value);

  unsigned qubits() const { return n_; }
  std::uint64_t dimension() const { return std::uint64_t{1} << n_; }
  bool bit(std::uint64_t x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  int amplitude_sign(std::uint64_t x) const { return bit(x) ? -1 : 1; }
  std::span<const Word> words() const { return words_; }
  /// Whole sign vector as an integer; requires n <= 6.
  std::uint64_t to_integer() const;

  friend bool operator==(const Rews&, const Rews&) = default;
  friend std::strong_ordering operator<=>(const Rews& a, const Rews& b);

 private:
  Rews(unsigned n, std::vector<Word> words) : n_(n), words_(std::move(words)) {}

  unsigned n_ = 0;
  std::vector<Word> words_;

  friend class RewsBuilder;
};

/// Mutable sign-vector buffer for producing a Rews one bit at a time.
class RewsBuilder {
 public:
  explicit RewsBuilder(unsigned n);
  void set(std::uint64_t x, bool minus = true) {
    const Rews::Word m = Rews::Word{1} << (x & 63);
    if (minus) {
      words_[x >> 6] |= m;
    } else {
      words_[x >> 6] &= ~m;
    }
  }
  unsigned qubits() const { return n_; }
  Rews build() &&;

 private:
  unsigned n_;
  std::vector<Rews::Word> words_;
};

/// Throws RangeError unless 1 <= n <= limit.
void check_qubits(unsigned n, unsigned limit, std::string_view what);

Rews constant_state(unsigned n, Sign sign);
Rews from_affine(unsigned n, AffineForm form);

/// Number of negative amplitudes.
std::uint64_t structural_degree(const Rews& r);
Rews negate(const Rews& r);
/// `hi` occupies the leading (most significant) qubits.
Rews tensor(const Rews& hi, const Rews& lo);
StructuralClass classify(const Rews& r);
std::optional<AffineForm> affine_test(const Rews& r);

/// perm[i - 1] is the position qubit i moves to; must be a bijection on 1..n.
Rews permute_qubits(const Rews& r, std::span<const unsigned> perm);

/// Sign vector of `r` restricted to the qubits in `part`, with every other
/// qubit fixed at the bits of `anchor`.
Rews restrict_to(const Rews& r, QubitSet part, std::uint64_t anchor = 0);

/// The state with its first amplitude forced positive, and the sign removed.
struct Normalized {
  Rews state;
  Sign sign;
};
Normalized normalize(const Rews& r);

struct RewsHash {
  std::size_t operator()(const Rews& r) const noexcept;
};

}  // namespace rews
