#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rews/census.hpp"
#include "rews/report.hpp"
#include "rews/sampling.hpp"
#include "rews/separability.hpp"
#include "rews/similarity.hpp"
#include "rews/state.hpp"
#include "rews/text_format.hpp"
#include "rews/verify.hpp"

namespace rews::cli {

namespace {

constexpr unsigned kMaxAnalysisCli = kMaxAnalysisQubits;

struct Shared {
  bool json = false;
  bool no_timestamp = false;
};

std::optional<std::string> header_time(const Shared& shared) {
  if (shared.no_timestamp) return std::nullopt;
  return utc_timestamp();
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

// Thrown for n beyond a command's size guard.
struct LimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void guard(unsigned n, unsigned limit, const std::string& command, const std::string& hint) {
  if (n > limit) {
    throw LimitExceeded(command + " refuses n = " + std::to_string(n) + " (limit " +
                        std::to_string(limit) + "); " + hint);
  }
}

void require_positive(unsigned n) {
  if (n == 0) throw InputError("n must be at least 1");
}

std::string status_text(unsigned delta, unsigned n) {
  if (n == 1) return "single qubit";
  if (delta == n) return "fully separable";
  if (delta == 1) return "fully entangled";
  return "partially separable";
}

std::string_view method_name(Method m) { return m == Method::kBrute ? "brute" : "fast"; }

// ---------------------------------------------------------------------------

int cmd_classify(const std::string& text, const Shared& shared, std::ostream& out) {
  const Rews r = parse_state(text);
  const std::uint64_t degree = structural_degree(r);
  const StructuralClass cls = classify(r);
  const bool odd = degree % 2 == 1;
  const bool balanced = 2 * degree == r.dimension();
  const bool constant = degree == 0 || degree == r.dimension();
  if (shared.json) {
    emit(out, {{"state", format_state(r)},
               {"n", r.qubits()},
               {"degree", degree},
               {"class", class_tag(cls)},
               {"odd", odd},
               {"balanced", balanced},
               {"constant", constant}});
    return kOk;
  }
  out << "state " << format_state(r) << '\n'
      << "degree " << degree << '\n'
      << "class " << class_tag(cls) << '\n'
      << "parity " << (odd ? "odd" : "even") << '\n'
      << "balanced " << (balanced ? "yes" : "no") << '\n'
      << "constant " << (constant ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_delta(const std::string& text, const Shared& shared, std::ostream& out) {
  const Rews r = parse_state(text);
  if (shared.json) {
    emit(out, {{"state", format_state(r)}, {"degree", structural_degree(r)}});
  } else {
    out << structural_degree(r) << '\n';
  }
  return kOk;
}

int cmd_sep_degree(const std::string& text, const std::string& method, const Shared& shared,
                   std::ostream& out, std::ostream& err) {
  const Rews r = parse_state(text);
  guard(r.qubits(), kMaxAnalysisCli, "sep-degree", "the brute search is exponential in n");
  const unsigned n = r.qubits();

  SeparabilityReport report;
  std::optional<unsigned> fast;
  int code = kOk;
  if (method == "brute") {
    report = separable_degree_brute(r);
  } else if (method == "fast") {
    report = separable_degree(r);
  } else {
    report = separable_degree_brute(r);
    fast = separable_degree_fast(r);
    if (fast && *fast != report.delta) {
      err << "error: fast path gives " << *fast << " but brute search gives " << report.delta << '\n';
      code = kViolations;
    }
  }

  if (shared.json) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : report.witness.factors) {
      factors.push_back({{"qubits", format_qubits(f.qubits)}, {"state", format_state(f.state)}});
    }
    nlohmann::json j = {{"state", format_state(r)},
                        {"delta", report.delta},
                        {"status", status_text(report.delta, n)},
                        {"method", method_name(report.method)},
                        {"sign", std::string(1, sign_char(report.witness.global_sign))},
                        {"factors", factors}};
    if (method == "both") {
      j["fast"] = fast ? nlohmann::json(*fast) : nlohmann::json(nullptr);
      j["agree"] = code == kOk;
    }
    emit(out, j);
    return code;
  }
  out << "delta " << report.delta << '\n'
      << "status " << status_text(report.delta, n) << '\n'
      << "method " << method_name(report.method) << '\n';
  if (method == "both") out << "fast " << (fast ? std::to_string(*fast) : "n/a") << '\n';
  out << "witness " << report.witness.to_string() << '\n';
  return code;
}

int cmd_similar(const std::string& a_text, const std::string& b_text, bool all, const Shared& shared,
                std::ostream& out) {
  const Rews a = parse_state(a_text);
  const Rews b = parse_state(b_text);
  guard(std::max(a.qubits(), b.qubits()), kMaxAnalysisCli, "similar",
        "the subset search is exponential in n");
  const SimilarityReport report = similar_degree(a, b);
  std::vector<IdenticalPart> parts;
  if (all && report.gamma >= 1 && report.gamma < a.qubits()) parts = identical_parts(a, b, report.gamma);
  else if (report.part) parts.push_back(*report.part);

  if (shared.json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& p : parts) {
      list.push_back({{"part", format_state(p.factor)},
                      {"host_first", format_qubits(p.host_first)},
                      {"host_second", format_qubits(p.host_second)},
                      {"remainder_first", format_state(p.remainder_first)},
                      {"remainder_second", format_state(p.remainder_second)}});
    }
    emit(out, {{"gamma", report.gamma}, {"gamma_prefix", similar_degree_prefix(a, b)}, {"parts", list}});
    return kOk;
  }
  out << "gamma " << report.gamma << '\n';
  out << "gamma_prefix " << similar_degree_prefix(a, b) << '\n';
  for (const auto& p : parts) {
    out << "part " << format_state(p.factor) << " on " << format_qubits(p.host_first) << " / "
        << format_qubits(p.host_second) << ", remainders " << format_state(p.remainder_first) << " / "
        << format_state(p.remainder_second) << '\n';
  }
  return kOk;
}

int cmd_census(unsigned n, std::optional<std::uint64_t> degree, const std::string& method,
               unsigned workers, const Shared& shared, std::ostream& out) {
  require_positive(n);
  guard(n, kMaxEnumerationQubits, "census", "use sample for larger n");
  if (degree && *degree > (std::uint64_t{1} << n)) {
    throw InputError("--delta " + std::to_string(*degree) + " exceeds 2^n");
  }
  CensusTable table =
      census(n, method == "brute" ? DeltaMethod::kBrute : DeltaMethod::kFastWithFallback, workers);
  if (degree) table = filter_degree(table, *degree);
  const auto stamp = header_time(shared);
  if (shared.json) {
    emit(out, to_json(table, stamp));
  } else {
    out << to_text(table, stamp);
  }
  return kOk;
}

int cmd_verify(unsigned n, const std::vector<std::string>& checks, const std::string& violations_file,
               std::uint64_t seed, std::uint64_t samples, unsigned workers, const Shared& shared,
               std::ostream& out, std::ostream& err) {
  require_positive(n);
  guard(n, kMaxVerifyQubits, "verify", "exhaustive checks stop at n = 4, sampled ones at n = 5");
  VerifyOptions options;
  options.seed = seed;
  options.samples = samples;
  options.workers = workers;
  const VerificationReport report = verify_theorems(n, checks, options);
  const auto stamp = header_time(shared);
  if (shared.json) {
    emit(out, to_json(report, stamp));
  } else {
    out << to_text(report, stamp);
  }
  if (!violations_file.empty()) {
    std::ofstream file(violations_file);
    if (!file) throw InputError("cannot write " + violations_file);
    file << violations_text(report);
  }
  if (report.failed()) {
    err << "verify: violations found\n";
    return kViolations;
  }
  return kOk;
}

int cmd_sample(unsigned n, std::uint64_t count, std::uint64_t seed, bool hex, const Shared& shared,
               std::ostream& out) {
  require_positive(n);
  guard(n, kMaxAnalysisCli, "sample", "states have 2^n signs");
  if (hex && n < 2) throw InputError("--hex needs n >= 2");
  nlohmann::json list = nlohmann::json::array();
  for (std::uint64_t i = 0; i < count; ++i) {
    const Rews r = sample_state(n, seed, i);
    const std::string s = hex ? format_state_hex(r) : format_state(r);
    if (shared.json) list.push_back(s);
    else out << s << '\n';
  }
  if (shared.json) emit(out, list);
  return kOk;
}

int write_state(const Rews& r, bool hex, const Shared& shared, std::ostream& out) {
  if (hex && r.qubits() < 2) throw InputError("--hex needs n >= 2");
  const std::string s = hex ? format_state_hex(r) : format_state(r);
  if (shared.json) {
    emit(out, {{"state", s}, {"degree", structural_degree(r)}, {"class", class_tag(classify(r))}});
  } else {
    out << s << '\n';
  }
  return kOk;
}

AffineForm parse_affine_args(unsigned n, const std::string& a_bits, const std::string& c) {
  if (a_bits.size() != n) {
    throw InputError("affine coefficients need " + std::to_string(n) + " bits, got " +
                     std::to_string(a_bits.size()));
  }
  AffineForm form;
  for (unsigned i = 0; i < n; ++i) {
    if (a_bits[i] != '0' && a_bits[i] != '1') {
      throw InputError("affine coefficient " + std::to_string(i) + " is not 0 or 1");
    }
    // Qubit i+1 is index bit n-1-i.
    if (a_bits[i] == '1') form.a |= std::uint64_t{1} << (n - 1 - i);
  }
  if (c != "0" && c != "1") throw InputError("affine constant must be 0 or 1");
  form.c = c == "1";
  return form;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separability and similarity analysis for real equally weighted states"};
  app.name("rews");
  app.require_subcommand(1, 1);
  app.fallthrough();

  Shared shared;
  app.add_flag("--json", shared.json, "Machine-readable output");
  app.add_flag("--no-timestamp", shared.no_timestamp, "Omit the report timestamp");

  std::string state_a;
  std::string state_b;

  auto* classify_cmd = app.add_subcommand("classify", "Structural degree, class and parity");
  classify_cmd->add_option("state", state_a, "State text")->required();

  auto* delta_cmd = app.add_subcommand("delta", "Structural degree (number of minus signs)");
  delta_cmd->add_option("state", state_a, "State text")->required();

  std::string method = "brute";
  auto* sep_cmd = app.add_subcommand("sep-degree", "Separable degree and witness factorization");
  sep_cmd->add_option("state", state_a, "State text")->required();
  sep_cmd->add_option("--method", method, "brute, fast or both")
      ->check(CLI::IsMember({"brute", "fast", "both"}));

  bool all_parts = false;
  auto* similar_cmd = app.add_subcommand("similar", "Similar degree and identical part");
  similar_cmd->add_option("first", state_a, "State text")->required();
  similar_cmd->add_option("second", state_b, "State text")->required();
  similar_cmd->add_flag("--all", all_parts, "List every distinct common factor");

  unsigned n = 0;
  unsigned workers = 0;
  std::optional<std::uint64_t> census_degree;
  std::string census_method = "brute";
  auto* census_cmd = app.add_subcommand("census", "Exhaustive (degree, class, delta) table");
  census_cmd->add_option("-n", n, "Qubit count")->required();
  census_cmd->add_option("--delta", census_degree, "Keep one structural degree");
  census_cmd->add_option("--method", census_method, "brute or fast")
      ->check(CLI::IsMember({"brute", "fast"}));
  census_cmd->add_option("--workers", workers, "Worker threads (default REWS_WORKERS or all cores)");

  std::vector<std::string> checks;
  std::string violations_file;
  std::uint64_t seed = VerifyOptions{}.seed;
  std::uint64_t samples = VerifyOptions{}.samples;
  bool list_checks = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification harness");
  auto* verify_n = verify_cmd->add_option("-n", n, "Qubit count");
  verify_cmd->add_option("--check", checks, "Check id (repeatable); all when omitted");
  verify_cmd->add_option("--violations-file", violations_file, "Write every violation here");
  verify_cmd->add_option("--seed", seed, "Seed for sampled checks");
  verify_cmd->add_option("--samples", samples, "Samples per sampled check");
  verify_cmd->add_option("--workers", workers, "Worker threads");
  verify_cmd->add_flag("--list", list_checks, "List check ids and exit");

  std::uint64_t count = 0;
  bool hex = false;
  auto* sample_cmd = app.add_subcommand("sample", "Seeded uniform random states");
  sample_cmd->add_option("-n", n, "Qubit count")->required();
  sample_cmd->add_option("-c,--count", count, "Number of states")->required();
  sample_cmd->add_option("--seed", seed, "Stream seed")->required();
  sample_cmd->add_flag("--hex", hex, "Hex bit strings");

  auto* make_cmd = app.add_subcommand("make", "Named example states");
  make_cmd->require_subcommand(1, 1);
  std::string sign = "+";
  auto* make_constant = make_cmd->add_subcommand("constant", "All-plus or all-minus state");
  make_constant->add_option("--sign", sign, "+ or -")->check(CLI::IsMember({"+", "-"}));
  std::uint64_t mark = 0;
  auto* make_grover = make_cmd->add_subcommand("grover-mark", "Single minus sign at index X");
  make_grover->add_option("X", mark, "Marked basis index")->required();
  std::string affine_a;
  std::string affine_c;
  auto* make_affine = make_cmd->add_subcommand("affine", "(-1)^(a.x + c), a given qubit 1 first");
  make_affine->add_option("A", affine_a, "Coefficient bits")->required();
  make_affine->add_option("C", affine_c, "Constant bit")->required();
  for (auto* sub : {make_constant, make_grover, make_affine}) {
    sub->add_option("-n", n, "Qubit count")->required();
    sub->add_flag("--hex", hex, "Hex bit string");
    sub->fallthrough();
  }
  for (auto* sub : {classify_cmd, delta_cmd, sep_cmd, similar_cmd, census_cmd, verify_cmd,
                    sample_cmd, make_cmd}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*classify_cmd) return cmd_classify(state_a, shared, out);
    if (*delta_cmd) return cmd_delta(state_a, shared, out);
    if (*sep_cmd) return cmd_sep_degree(state_a, method, shared, out, err);
    if (*similar_cmd) return cmd_similar(state_a, state_b, all_parts, shared, out);
    if (*census_cmd) return cmd_census(n, census_degree, census_method, workers, shared, out);
    if (*verify_cmd) {
      if (list_checks) {
        for (const auto& c : available_checks()) out << c.id << '\t' << c.description << '\n';
        return kOk;
      }
      if (verify_n->count() == 0) throw InputError("verify needs -n");
      return cmd_verify(n, checks, violations_file, seed, samples, workers, shared, out, err);
    }
    if (*sample_cmd) return cmd_sample(n, count, seed, hex, shared, out);
    if (*make_cmd) {
      require_positive(n);
      check_qubits(n, kMaxQubits, "make");
      if (*make_constant) {
        return write_state(constant_state(n, sign == "-" ? Sign::kMinus : Sign::kPlus), hex, shared, out);
      }
      if (*make_grover) {
        if (mark >= (std::uint64_t{1} << n)) {
          throw InputError("grover-mark index " + std::to_string(mark) + " exceeds 2^n - 1");
        }
        RewsBuilder builder(n);
        builder.set(mark, true);
        return write_state(std::move(builder).build(), hex, shared, out);
      }
      return write_state(from_affine(n, parse_affine_args(n, affine_a, affine_c)), hex, shared, out);
    }
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace rews::cli
