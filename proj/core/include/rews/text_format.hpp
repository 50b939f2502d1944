#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "rews/state.hpp"

namespace rews {

/// Malformed state text. `position()` is the 0-based offset of the first
/// offending character in the input.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Accepts
///   <n>:<bits>              e.g. 3:10000111, leftmost character is x = 0
///   <n>:0x<hex>             bit sequence big-endian, 4 bits per digit
///   affine:<n>:<a-bits>:<c> a-bits is n characters, qubit 1 first
/// Throws ParseError on malformed text and RangeError when n > kMaxQubits.
Rews parse_state(std::string_view text);

/// `<n>:<bits>`.
std::string format_state(const Rews& r);
/// `<n>:0x<hex>`; requires n >= 2.
std::string format_state_hex(const Rews& r);
/// Bare bit string, leftmost character is x = 0.
std::string format_bits(const Rews& r);
/// `affine:<n>:<a-bits>:<c>`.
std::string format_affine(unsigned n, AffineForm form);
/// Qubit list such as "{1,3}".
std::string format_qubits(QubitSet s);

}  // namespace rews
