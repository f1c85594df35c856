#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "lmm/validation.hpp"

using namespace lmm::validation;

int main() {
  const std::vector<std::function<CriterionReport()>> criteria{
      coulomb_table, coulomb_analytic, fulcher_table, gaussian_table,
      density_fidelity, plateau, coulomb_divergence, properties,
  };
  int failed = 0;
  for (const auto& build : criteria) {
    CriterionReport rep;
    try {
      rep = build();
    } catch (const std::exception& e) {
      std::printf("FAIL criterion: unexpected exception: %s\n", e.what());
      ++failed;
      continue;
    }
    const int n = static_cast<int>(rep.checks.size());
    std::printf("%s criterion %d: %s [%d/%d checks]\n", rep.passed() ? "PASS" : "FAIL", rep.id, rep.title.c_str(),
                n - rep.failures(), n);
    for (const auto& c : rep.checks) {
      if (c.passed) continue;
      std::printf("    %s: value=%.10g expected=%.10g tol=%.3g%s%s\n", c.name.c_str(), c.value, c.expected,
                  c.tolerance, c.note.empty() ? "" : " ", c.note.c_str());
    }
    if (!rep.passed()) ++failed;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
