#include "rews/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace rews {

namespace {

nlohmann::json optional_count(const std::optional<BigInt>& v) {
  return v ? nlohmann::json(v->str()) : nlohmann::json(nullptr);
}

nlohmann::json timestamp_field(const std::optional<std::string>& generated_at) {
  return generated_at ? nlohmann::json(*generated_at) : nlohmann::json(nullptr);
}

std::string match_text(std::optional<bool> m) {
  if (!m) return "n/a";
  return *m ? "yes" : "NO";
}

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

nlohmann::json to_json(const VerificationReport& report, const std::optional<std::string>& generated_at) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& rec : report.records) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (std::size_t i = 0; i < rec.violations.size() && i < kReportedWitnesses; ++i) {
      witnesses.push_back(rec.violations[i]);
    }
    const auto m = rec.match();
    records.push_back({
        {"id", rec.id},
        {"description", rec.description},
        {"population", rec.population.str()},
        {"violations", std::to_string(rec.violations.size())},
        {"witnesses", witnesses},
        {"formula_value", optional_count(rec.formula_value)},
        {"brute_value", optional_count(rec.brute_value)},
        {"match", m ? nlohmann::json(*m) : nlohmann::json(nullptr)},
        {"note", rec.note},
    });
  }
  return {{"n", report.n},
          {"generated_at", timestamp_field(generated_at)},
          {"seed", std::to_string(report.seed)},
          {"passed", !report.failed()},
          {"records", records}};
}

nlohmann::json to_json(const CensusTable& table, const std::optional<std::string>& generated_at) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, count] : table.rows) {
    rows.push_back({{"degree", key.degree},
                    {"class", class_tag(key.cls)},
                    {"delta", key.delta},
                    {"count", count.str()}});
  }
  nlohmann::json classes = nlohmann::json::object();
  for (StructuralClass c : kAllClasses) classes[std::string(class_tag(c))] = table.count_class(c).str();
  return {{"n", table.n},
          {"generated_at", timestamp_field(generated_at)},
          {"total", table.total().str()},
          {"classes", classes},
          {"rows", rows}};
}

nlohmann::json to_json(const FractionReport& report) {
  return {{"n", report.n},
          {"degree", report.degree},
          {"separable_count", report.separable_count.str()},
          {"total", report.total.str()},
          {"ratio", report.ratio_text()},
          {"ratio_reduced", report.ratio.str()}};
}

nlohmann::json to_json(const FractionSeries& series) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : series.points) points.push_back(to_json(p));
  return {{"points", points}, {"strictly_decreasing", series.strictly_decreasing}};
}

std::string to_text(const VerificationReport& report, const std::optional<std::string>& generated_at) {
  std::ostringstream out;
  out << "verification report n=" << report.n << " seed=" << report.seed;
  if (generated_at) out << " generated_at=" << *generated_at;
  out << '\n';
  for (const auto& rec : report.records) {
    out << '\n' << (rec.failed() ? "FAIL " : "ok   ") << rec.id << ": " << rec.description << '\n';
    out << "  population " << rec.population.str() << ", violations " << rec.violations.size() << '\n';
    if (rec.formula_value || rec.brute_value) {
      out << "  formula " << (rec.formula_value ? rec.formula_value->str() : "-") << ", brute "
          << (rec.brute_value ? rec.brute_value->str() : "-") << ", match " << match_text(rec.match())
          << '\n';
    }
    if (!rec.note.empty()) out << "  note: " << rec.note << '\n';
    for (std::size_t i = 0; i < rec.violations.size() && i < kReportedWitnesses; ++i) {
      out << "  - " << rec.violations[i] << '\n';
    }
    if (rec.violations.size() > kReportedWitnesses) {
      out << "  ... " << rec.violations.size() - kReportedWitnesses << " more\n";
    }
  }
  out << '\n' << (report.failed() ? "result: violations found" : "result: all checks passed") << '\n';
  return out.str();
}

std::string to_text(const CensusTable& table, const std::optional<std::string>& generated_at) {
  std::ostringstream out;
  out << "census n=" << table.n << " total=" << table.total().str();
  if (generated_at) out << " generated_at=" << *generated_at;
  out << '\n';
  out << std::left << std::setw(8) << "degree" << std::setw(18) << "class" << std::setw(7) << "delta"
      << "count\n";
  for (const auto& [key, count] : table.rows) {
    out << std::setw(8) << key.degree << std::setw(18) << class_tag(key.cls) << std::setw(7)
        << key.delta << count.str() << '\n';
  }
  out << "classes:";
  for (StructuralClass c : kAllClasses) out << ' ' << class_letter(c) << '=' << table.count_class(c).str();
  out << '\n';
  return out.str();
}

std::string violations_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& rec : report.records) {
    for (const auto& v : rec.violations) out << rec.id << '\t' << v << '\n';
  }
  return out.str();
}

CensusTable filter_degree(const CensusTable& table, std::uint64_t degree) {
  CensusTable out;
  out.n = table.n;
  for (const auto& [key, count] : table.rows) {
    if (key.degree == degree) out.rows[key] = count;
  }
  return out;
}

}  // namespace rews
