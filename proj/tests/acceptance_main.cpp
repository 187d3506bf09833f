#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hmf/harness/suite.hpp"

namespace {

const std::map<int, std::string>& criterion_titles() {
  static const std::map<int, std::string> titles{
      {1, "arithmetic exactness"},
      {2, "det(CZ+D) = det M det(conj(C)Z'+conj(D))"},
      {3, "hermitian Jacobian and its determinant"},
      {4, "Eisenstein theta automorphy and symmetry"},
      {5, "Eisenstein three-term relations"},
      {6, "Eisenstein bracket determinant skew and quotient"},
      {7, "Gauss theta squares and their relations"},
      {8, "Gauss bracket determinant and phi10 symmetry"},
      {9, "Gauss vanishing locus"},
      {10, "rho_Jac representation"},
      {11, "quaternionic Jacobian and its determinant"},
      {12, "S3 quotient of the level-p group"},
      {13, "quaternionic reduction identity and three-term rule"},
      {14, "bracket of weight-1 thetas transforms under St (x) St"},
      {15, "theta truncation against a wider sum"},
  };
  return titles;
}

}  // namespace

int main() {
  using namespace hmf::harness;
  const SuiteConfig config = default_config();
  const auto report = run_suite(config);

  std::map<int, std::vector<const CheckRecord*>> by_criterion;
  for (const auto& r : report.checks) by_criterion[r.criterion].push_back(&r);

  int failed = 0;
  for (const auto& [criterion, title] : criterion_titles()) {
    const auto it = by_criterion.find(criterion);
    bool pass = it != by_criterion.end();
    std::string detail;
    if (pass) {
      for (const auto* r : it->second) {
        pass = pass && r->pass;
        if (!detail.empty()) detail += ", ";
        detail += r->id + " " + format_residual(r->max_residual) + "/" + format_residual(r->tolerance);
      }
    } else {
      detail = "no checks registered";
    }
    if (!pass) ++failed;
    std::printf("%s criterion %2d: %s [%s]\n", pass ? "PASS" : "FAIL", criterion, title.c_str(), detail.c_str());
  }
  std::printf("%d/%zu criteria passed (seed %llu, %.2f s)\n", static_cast<int>(criterion_titles().size()) - failed,
              criterion_titles().size(), static_cast<unsigned long long>(config.seed), report.seconds);
  return failed == 0 ? 0 : 1;
}
