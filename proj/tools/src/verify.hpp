#pragma once

#include "json_io.hpp"

#include "spinharm/half_integer.hpp"

#include <string>
#include <vector>

namespace spinharm {

struct SuiteOptions {
  HalfInteger l_max;
  double h = 1e-4;
  long long nodes = 0;  // quadrature node override; per-state bound when 0 or too small
  unsigned seed = 12345;
  std::string out_dir = ".";
};

struct SectionResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::string details_path;
};

// Each runner sweeps its invariants, writes verify_<name>.json under
// opts.out_dir, and reports counts. Tolerances are fixed by the suite, not
// the caller: symbolic suites demand exactness, numeric suites use the
// documented grid and quadrature bounds.
SectionResult run_eigen_suite(const SuiteOptions& opts);
SectionResult run_ladder_suite(const SuiteOptions& opts);
SectionResult run_commutators_suite(const SuiteOptions& opts);
SectionResult run_oracle_suite(const SuiteOptions& opts);
SectionResult run_doublevalue_suite(const SuiteOptions& opts);

Json summary_to_json(const std::vector<SectionResult>& sections);

}  // namespace spinharm
