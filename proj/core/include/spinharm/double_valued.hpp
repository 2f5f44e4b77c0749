#pragma once

#include "spinharm/harmonic.hpp"

namespace spinharm {

struct DoubleValuedReport {
  QuantumNumbers qn;
  // Y(θ, φ+2π)/Y(θ, φ) should be -1 for half-odd m, +1 for integer m;
  // Y(θ, φ+4π)/Y(θ, φ) should be +1 always.
  double max_ratio_error_2pi = 0.0;
  double max_ratio_error_4pi = 0.0;
  // |Y|² must not depend on φ: max relative spread across φ samples.
  double max_abs2_spread = 0.0;
  long long samples = 0;

  bool pass(double tol) const {
    return max_ratio_error_2pi <= tol && max_ratio_error_4pi <= tol && max_abs2_spread <= tol;
  }
};

DoubleValuedReport double_valued_check(const QuantumNumbers& qn);

}  // namespace spinharm
