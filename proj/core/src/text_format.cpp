#include "rews/text_format.hpp"

#include <charconv>
#include <sstream>

namespace rews {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& what) {
  std::ostringstream msg;
  msg << "cannot parse state '" << text << "' at position " << pos << ": " << what;
  throw ParseError(msg.str(), pos);
}

// Parses the decimal qubit count starting at `pos`; leaves `pos` on the
// character after the number.
unsigned parse_qubit_count(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == start) fail(text, start, "expected decimal qubit count");
  if (pos - start > 3) {
    throw RangeError("qubit count " + std::string(text.substr(start, pos - start)) +
                     " exceeds the representable maximum of " + std::to_string(kMaxQubits));
  }
  unsigned n = 0;
  std::from_chars(text.data() + start, text.data() + pos, n);
  if (n == 0) fail(text, start, "qubit count must be at least 1");
  if (n > kMaxQubits) {
    throw RangeError("qubit count " + std::to_string(n) + " exceeds the representable maximum of " +
                     std::to_string(kMaxQubits));
  }
  return n;
}

void expect_colon(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != ':') fail(text, pos, "expected ':'");
  ++pos;
}

int hex_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
  return -1;
}

Rews parse_affine(std::string_view text, std::size_t pos) {
  const unsigned n = parse_qubit_count(text, pos);
  expect_colon(text, pos);
  AffineForm form;
  const std::size_t a_start = pos;
  while (pos < text.size() && text[pos] != ':') {
    if (text[pos] != '0' && text[pos] != '1') fail(text, pos, "affine mask must be binary");
    ++pos;
  }
  if (pos - a_start != n) {
    fail(text, a_start,
         "affine mask length " + std::to_string(pos - a_start) + " != n = " + std::to_string(n));
  }
  for (unsigned j = 0; j < n; ++j) {
    if (text[a_start + j] == '1') form.a |= std::uint64_t{1} << (n - 1 - j);
  }
  expect_colon(text, pos);
  if (pos >= text.size() || (text[pos] != '0' && text[pos] != '1')) {
    fail(text, pos, "affine constant must be 0 or 1");
  }
  form.c = text[pos] == '1';
  ++pos;
  if (pos != text.size()) fail(text, pos, "trailing characters");
  return from_affine(n, form);
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : InputError(message), position_(position) {}

Rews parse_state(std::string_view text) {
  constexpr std::string_view kAffine = "affine:";
  if (text.starts_with(kAffine)) return parse_affine(text, kAffine.size());

  std::size_t pos = 0;
  const unsigned n = parse_qubit_count(text, pos);
  expect_colon(text, pos);
  const std::uint64_t dim = std::uint64_t{1} << n;
  RewsBuilder b(n);

  if (text.substr(pos).starts_with("0x") || text.substr(pos).starts_with("0X")) {
    pos += 2;
    if (dim % 4 != 0) fail(text, pos, "hex form needs n >= 2");
    const std::size_t digits = text.size() - pos;
    if (digits != dim / 4) {
      fail(text, pos,
           "hex length " + std::to_string(digits) + " != " + std::to_string(dim / 4) +
               " (2^" + std::to_string(n) + "/4)");
    }
    for (std::uint64_t d = 0; d < digits; ++d) {
      const int v = hex_value(text[pos + d]);
      if (v < 0) fail(text, pos + d, "invalid hex digit");
      for (unsigned k = 0; k < 4; ++k) {
        if ((v >> (3 - k)) & 1) b.set(d * 4 + k);
      }
    }
    return std::move(b).build();
  }

  const std::size_t bits_start = pos;
  for (std::size_t i = bits_start; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') fail(text, i, "expected '0' or '1'");
  }
  const std::size_t len = text.size() - bits_start;
  if (len != dim) {
    fail(text, len < dim ? text.size() : bits_start + dim,
         "sign vector length " + std::to_string(len) + " != " + std::to_string(dim) + " (2^" +
             std::to_string(n) + ")");
  }
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (text[bits_start + x] == '1') b.set(x);
  }
  return std::move(b).build();
}

std::string format_bits(const Rews& r) {
  std::string out(r.dimension(), '0');
  for (std::uint64_t x = 0; x < r.dimension(); ++x) {
    if (r.bit(x)) out[x] = '1';
  }
  return out;
}

std::string format_state(const Rews& r) {
  return std::to_string(r.qubits()) + ":" + format_bits(r);
}

std::string format_state_hex(const Rews& r) {
  if (r.qubits() < 2) throw InputError("hex form needs n >= 2");
  std::string out = std::to_string(r.qubits()) + ":0x";
  for (std::uint64_t x = 0; x < r.dimension(); x += 4) {
    int v = 0;
    for (unsigned k = 0; k < 4; ++k) v = (v << 1) | (r.bit(x + k) ? 1 : 0);
    out.push_back(kHexDigits[v]);
  }
  return out;
}

std::string format_affine(unsigned n, AffineForm form) {
  std::string out = "affine:" + std::to_string(n) + ":";
  for (unsigned j = 0; j < n; ++j) {
    out.push_back(((form.a >> (n - 1 - j)) & 1u) ? '1' : '0');
  }
  out += form.c ? ":1" : ":0";
  return out;
}

std::string format_qubits(QubitSet s) {
  std::string out = "{";
  bool first = true;
  for (unsigned q : s.qubits()) {
    if (!first) out.push_back(',');
    out += std::to_string(q);
    first = false;
  }
  out.push_back('}');
  return out;
}

}  // namespace rews
