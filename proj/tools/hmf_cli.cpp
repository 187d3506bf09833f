#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hmf/harness/serialize.hpp"
#include "hmf/harness/suite.hpp"
#include "hmf/theta.hpp"

namespace {

std::string format_complex(hmf::cplx z) {
  std::ostringstream os;
  os << std::setprecision(15) << z.real() << (std::signbit(z.imag()) ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

int run_eval(const std::string& case_name, int index, const std::string& point_file, double tol, bool gradient) {
  const auto kind = hmf::parse_theta_case(case_name);
  const auto table = hmf::characteristic_table(kind);
  if (index < 1 || index > static_cast<int>(table.size()))
    throw std::invalid_argument("--theta must lie in 1.." + std::to_string(table.size()));
  const auto& ch = table[static_cast<std::size_t>(index - 1)];
  const auto z = hmf::harness::hermitian_point_from_json(hmf::harness::read_json_file(point_file));
  hmf::TruncationPolicy policy;
  policy.tail_bound = tol;
  const auto jet = hmf::theta_jet(ch, z, policy, gradient);
  std::cout << ch.label() << " = " << format_complex(jet.value) << "\n";
  if (gradient) {
    const auto& names = hmf::hermitian_coordinate_names();
    for (int k = 0; k < 4; ++k)
      std::cout << "d/d" << names[static_cast<std::size_t>(k)] << " = " << format_complex(jet.gradient(k / 2, k % 2))
                << "\n";
  }
  std::cout << "radius " << jet.radius << ", tail bound " << std::setprecision(3) << jet.value_tail << "\n";
  return 0;
}

int run_verify(hmf::harness::SuiteConfig config, const std::string& report_file) {
  const auto report = hmf::harness::run_suite(config, [](const hmf::harness::CheckRecord& r) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(34) << r.id << " residual "
              << hmf::harness::format_residual(r.max_residual) << " <= "
              << hmf::harness::format_residual(r.tolerance) << std::endl;
  });
  const auto j = hmf::harness::to_json(report);
  if (!report_file.empty()) hmf::harness::write_json_file(report_file, j);
  std::cout << (report.pass() ? "all checks passed" : "some checks failed") << " (seed " << config.seed << ")\n";
  return report.pass() ? 0 : 1;
}

int run_report(const std::string& input, const std::string& format) {
  const auto j = hmf::harness::read_json_file(input);
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << hmf::harness::text_report(j);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theta constants, brackets and automorphy checks for degree-2 hermitian and quaternionic forms"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate a theta series at a point");
  std::string case_name;
  int theta_index = 1;
  std::string point_file;
  double tol = 1e-12;
  bool gradient = false;
  eval->add_option("--case", case_name, "eisenstein or gauss")->required()->check(CLI::IsMember({"eisenstein", "gauss"}));
  eval->add_option("--theta", theta_index, "1-based index into the characteristic table")->required();
  eval->add_option("--point", point_file, "JSON point file")->required()->check(CLI::ExistingFile);
  eval->add_option("--tol", tol, "Tail bound for the truncated sum")->check(CLI::PositiveNumber);
  eval->add_flag("--gradient", gradient, "Also print the gradient");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suites;
  std::vector<std::string> checks;
  std::string seed_text;
  double tol_scale = 1.0;
  std::string report_file;
  std::string config_file;
  verify->add_option("--suite", suites, "Suite name (repeatable): arith, groups, theta, reps, brackets");
  verify->add_option("--check", checks, "Check id (repeatable)");
  verify->add_option("--seed", seed_text, "Seed; overrides the HMF_SEED environment variable");
  verify->add_option("--tol-scale", tol_scale, "Multiplier for all nonzero tolerances")->check(CLI::PositiveNumber);
  verify->add_option("--report", report_file, "Write the JSON report here");
  verify->add_option("--config", config_file, "JSON config file")->check(CLI::ExistingFile);

  auto* report = app.add_subcommand("report", "Summarize a JSON report");
  std::string input;
  std::string format = "text";
  report->add_option("--input", input, "Report file")->required()->check(CLI::ExistingFile);
  report->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) return run_eval(case_name, theta_index, point_file, tol, gradient);
    if (*verify) {
      auto config = hmf::harness::default_config();
      if (!config_file.empty()) hmf::harness::apply_config_json(hmf::harness::read_json_file(config_file), config);
      if (!suites.empty()) config.suites = suites;
      if (!checks.empty()) config.checks = checks;
      if (verify->count("--tol-scale") > 0) config.tol_scale = tol_scale;
      if (!seed_text.empty()) {
        config.seed = hmf::harness::parse_seed(seed_text);
        config.seed_source = "explicit";
      }
      hmf::harness::select_checks(config);
      return run_verify(config, report_file);
    }
    if (*report) return run_report(input, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
