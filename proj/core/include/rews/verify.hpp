#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rews/formulas.hpp"

namespace rews {

/// Outcome of one check. `violations` holds every offending witness; the
/// report writers truncate it.
struct VerificationRecord {
  std::string id;
  std::string description;
  BigInt population = 0;
  std::vector<std::string> violations;
  std::optional<BigInt> formula_value;
  std::optional<BigInt> brute_value;
  std::string note;

  std::optional<bool> match() const {
    if (!formula_value || !brute_value) return std::nullopt;
    return *formula_value == *brute_value;
  }
  /// Any violation, or a formula that disagrees with enumeration.
  bool failed() const { return !violations.empty() || match() == false; }
};

struct VerificationReport {
  unsigned n = 0;
  std::uint64_t seed = 0;
  std::vector<VerificationRecord> records;

  bool failed() const;
  const VerificationRecord* find(std::string_view id) const;
};

struct CheckInfo {
  std::string_view id;
  std::string_view description;
};

/// Every check id in report order.
std::span<const CheckInfo> available_checks();

struct VerifyOptions {
  std::uint64_t seed = 0x5EED;
  /// States or pairs drawn per sampled check.
  std::uint64_t samples = 1000;
  unsigned workers = 0;
};

/// Largest n the harness accepts; exhaustive checks run up to
/// kMaxEnumerationQubits, the rest use constructions and seeded samples.
inline constexpr unsigned kMaxVerifyQubits = 5;

/// Runs the selected checks (all when `selection` is empty). Records come back
/// in available_checks() order whatever the selection order, and each check
/// draws from its own seeded stream, so any subset yields identical records.
/// Throws InputError for an unknown id and RangeError for n outside
/// [1, kMaxVerifyQubits].
VerificationReport verify_theorems(unsigned n, std::span<const std::string> selection = {},
                                   const VerifyOptions& options = {});

}  // namespace rews
