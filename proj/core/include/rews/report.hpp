#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "rews/census.hpp"
#include "rews/formulas.hpp"
#include "rews/verify.hpp"

namespace rews {

/// Witnesses kept per record in the main report; the side file has them all.
inline constexpr std::size_t kReportedWitnesses = 10;

/// UTC time as an ISO-8601 string.
std::string utc_timestamp();

// Counts are serialized as decimal strings. `generated_at` is null when empty.
nlohmann::json to_json(const VerificationReport& report, const std::optional<std::string>& generated_at);
nlohmann::json to_json(const CensusTable& table, const std::optional<std::string>& generated_at);
nlohmann::json to_json(const FractionReport& report);
nlohmann::json to_json(const FractionSeries& series);

std::string to_text(const VerificationReport& report, const std::optional<std::string>& generated_at);
std::string to_text(const CensusTable& table, const std::optional<std::string>& generated_at);

/// Every violation, one per line, prefixed by its check id.
std::string violations_text(const VerificationReport& report);

/// Keeps only rows with the given structural degree.
CensusTable filter_degree(const CensusTable& table, std::uint64_t degree);

}  // namespace rews
