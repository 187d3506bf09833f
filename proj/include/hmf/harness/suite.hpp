#pragma once

// Suite configuration, the runner and the JSON/text report.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hmf/harness/checks.hpp"

namespace hmf::harness {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr const char* kSeedVariable = "HMF_SEED";

struct SuiteConfig {
  std::uint64_t seed = kDefaultSeed;
  /// "default", "env" or "explicit".
  std::string seed_source = "default";
  /// Empty selects every suite.
  std::vector<std::string> suites;
  /// Empty selects every check of the selected suites.
  std::vector<std::string> checks;
  /// Multiplies every nonzero tolerance.
  double tol_scale = 1.0;
  TruncationPolicy policy{};
  TruncationPolicy image_policy{1e-12, 14.0, 0.1};
};

inline std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  const unsigned long long v = std::stoull(text, &used, 0);
  if (used != text.size()) throw std::invalid_argument("invalid seed '" + text + "'");
  return v;
}

/// Default configuration, with the seed taken from HMF_SEED when set.
inline SuiteConfig default_config() {
  SuiteConfig c;
  if (const char* env = std::getenv(kSeedVariable); env != nullptr && *env != '\0') {
    c.seed = parse_seed(env);
    c.seed_source = "env";
  }
  return c;
}

inline void policy_from_json(const nlohmann::json& j, TruncationPolicy& p) {
  p.tail_bound = j.value("tail_bound", p.tail_bound);
  p.max_radius = j.value("max_radius", p.max_radius);
  p.min_margin = j.value("min_margin", p.min_margin);
}

inline nlohmann::json policy_to_json(const TruncationPolicy& p) {
  return {{"tail_bound", p.tail_bound}, {"max_radius", p.max_radius}, {"min_margin", p.min_margin}};
}

/// Overlays keys of a JSON config document: seed, suites, checks, tol_scale,
/// policy, image_policy.
inline void apply_config_json(const nlohmann::json& j, SuiteConfig& c) {
  static const std::set<std::string> known{"seed", "suites", "checks", "tol_scale", "policy", "image_policy"};
  for (const auto& [key, value] : j.items())
    if (!known.contains(key)) throw std::invalid_argument("unknown config key '" + key + "'");
  if (j.contains("seed")) {
    c.seed = j["seed"].is_string() ? parse_seed(j["seed"].get<std::string>()) : j["seed"].get<std::uint64_t>();
    c.seed_source = "explicit";
  }
  if (j.contains("suites")) c.suites = j["suites"].get<std::vector<std::string>>();
  if (j.contains("checks")) c.checks = j["checks"].get<std::vector<std::string>>();
  if (j.contains("tol_scale")) c.tol_scale = j["tol_scale"].get<double>();
  if (j.contains("policy")) policy_from_json(j["policy"], c.policy);
  if (j.contains("image_policy")) policy_from_json(j["image_policy"], c.image_policy);
}

struct CheckRecord {
  std::string id;
  int criterion = 0;
  std::string suite;
  std::string anchor;
  int samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  nlohmann::json details = nlohmann::json::object();
  double seconds = 0.0;
};

struct VerificationReport {
  SuiteConfig config;
  std::vector<CheckRecord> checks;
  double seconds = 0.0;

  [[nodiscard]] bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.pass; });
  }
};

/// Checks selected by the configuration, in registry order. Unknown suite or
/// check names are an error.
inline std::vector<const CheckDefinition*> select_checks(const SuiteConfig& config) {
  const auto& registry = check_registry();
  for (const auto& s : config.suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw std::invalid_argument("unknown suite '" + s + "'");
  for (const auto& id : config.checks)
    if (std::none_of(registry.begin(), registry.end(), [&](const CheckDefinition& d) { return d.id == id; }))
      throw std::invalid_argument("unknown check id '" + id + "'");
  std::vector<const CheckDefinition*> out;
  for (const auto& d : registry) {
    const bool suite_ok =
        config.suites.empty() || std::find(config.suites.begin(), config.suites.end(), d.suite) != config.suites.end();
    const bool check_ok =
        config.checks.empty() || std::find(config.checks.begin(), config.checks.end(), d.id) != config.checks.end();
    if (suite_ok && check_ok) out.push_back(&d);
  }
  return out;
}

inline CheckRecord run_check(const CheckDefinition& def, const SuiteConfig& config) {
  CheckRecord rec;
  rec.id = def.id;
  rec.criterion = def.criterion;
  rec.suite = def.suite;
  rec.anchor = def.anchor;
  rec.tolerance = def.tolerance * config.tol_scale;
  rec.seed = derive_seed(config.seed, def.id);
  CheckContext ctx{rec.seed, config.policy, config.image_policy};
  Rng rng(rec.seed);
  const auto start = std::chrono::steady_clock::now();
  try {
    Measurement m = def.run(rng, ctx);
    rec.samples = m.samples;
    rec.max_residual = m.max_residual;
    rec.details = std::move(m.details);
  } catch (const std::exception& e) {
    rec.max_residual = std::numeric_limits<double>::infinity();
    rec.details["error"] = e.what();
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rec.pass = rec.max_residual <= rec.tolerance;
  return rec;
}

template <class Progress>
VerificationReport run_suite(const SuiteConfig& config, Progress&& progress) {
  VerificationReport report;
  report.config = config;
  const auto start = std::chrono::steady_clock::now();
  for (const auto* def : select_checks(config)) {
    report.checks.push_back(run_check(*def, config));
    progress(report.checks.back());
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline VerificationReport run_suite(const SuiteConfig& config) {
  return run_suite(config, [](const CheckRecord&) {});
}

// ---------------------------------------------------------------------------
// Serialization

/// Infinite residuals are written as the string "inf".
inline nlohmann::json residual_to_json(double r) {
  if (std::isinf(r)) return "inf";
  return r;
}

inline double residual_from_json(const nlohmann::json& j) {
  if (j.is_string()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json per_check_seconds = nlohmann::json::object();
  for (const auto& c : r.checks) {
    checks.push_back({{"id", c.id},
                      {"criterion", c.criterion},
                      {"suite", c.suite},
                      {"anchor", c.anchor},
                      {"samples", c.samples},
                      {"max_residual", residual_to_json(c.max_residual)},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass},
                      {"seed", c.seed},
                      {"details", c.details}});
    per_check_seconds[c.id] = c.seconds;
  }
  return {{"schema_version", kReportSchemaVersion},
          {"suite", r.config.suites.empty() ? nlohmann::json("all") : nlohmann::json(r.config.suites)},
          {"seed", r.config.seed},
          {"seed_source", r.config.seed_source},
          {"environment",
           {{"precision", "IEEE-754 binary64"},
            {"significant_digits", std::numeric_limits<double>::digits10},
            {"policy", policy_to_json(r.config.policy)},
            {"image_policy", policy_to_json(r.config.image_policy)},
            {"tol_scale", r.config.tol_scale}}},
          {"checks", checks},
          {"pass", r.pass()},
          {"timing", {{"total_seconds", r.seconds}, {"per_check_seconds", per_check_seconds}}}};
}

inline std::string format_residual(double r) {
  if (std::isinf(r)) return "inf";
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << r;
  return os.str();
}

/// One line per check plus a summary line.
inline std::string text_report(const nlohmann::json& report) {
  std::ostringstream os;
  os << "seed " << report.at("seed").get<std::uint64_t>() << " (" << report.value("seed_source", "?") << ")\n";
  int passed = 0;
  int total = 0;
  for (const auto& c : report.at("checks")) {
    ++total;
    const bool ok = c.at("pass").get<bool>();
    passed += ok ? 1 : 0;
    os << (ok ? "PASS " : "FAIL ") << std::left << std::setw(34) << c.at("id").get<std::string>() << " criterion "
       << std::setw(2) << c.at("criterion").get<int>() << "  residual "
       << format_residual(residual_from_json(c.at("max_residual"))) << " <= "
       << format_residual(c.at("tolerance").get<double>()) << "  (" << c.at("samples").get<int>() << " samples)\n";
  }
  os << passed << "/" << total << " checks passed\n";
  return os.str();
}

inline void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  return nlohmann::json::parse(in);
}

}  // namespace hmf::harness
