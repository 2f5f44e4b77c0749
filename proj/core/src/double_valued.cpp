#include "spinharm/double_valued.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace spinharm {

namespace {

// Σ |coeff|·sin^p·|cos|^q over the terms: the magnitude scale of an
// evaluation at θ, independent of φ. Error budgets are judged against this,
// because near zeros of the polynomial factor the value itself carries
// cancellation noise of exactly this scale times machine epsilon.
double eval_scale(const TrigExpr& e, double theta) {
  double s = std::sin(theta), c = std::abs(std::cos(theta));
  double acc = 0.0;
  for (const auto& t : e.terms())
    acc += std::sqrt(to_double(t.coeff.abs_squared())) *
           std::pow(s, t.sin_pow.to_double()) * std::pow(c, static_cast<double>(t.cos_pow));
  return acc;
}

}  // namespace

DoubleValuedReport double_valued_check(const QuantumNumbers& qn) {
  constexpr double kPi = 3.14159265358979323846;
  Harmonic h = make_harmonic(qn);
  DoubleValuedReport report;
  report.qn = qn;
  const double expected_2pi = qn.m.is_half_odd() ? -1.0 : 1.0;

  const double thetas[] = {0.37, 0.55, 0.83, 1.05, 1.31, 1.55, 1.83, 2.15, 2.43, 2.65};
  const double phis[] = {0.0, 0.9, 2.3, 3.8, 5.1};

  for (double theta : thetas) {
    // Ratio tests only make sense where the value is not lost in the
    // cancellation noise of the θ polynomial; |Y|² spread is judged against
    // the evaluation scale for the same reason.
    const double scale = eval_scale(h.expr, theta);
    double min_abs2 = std::numeric_limits<double>::infinity();
    double max_abs2 = 0.0;
    for (double phi : phis) {
      std::complex<double> base = h.expr.eval(theta, phi);
      std::complex<double> once = h.expr.eval(theta, phi + 2 * kPi);
      std::complex<double> twice = h.expr.eval(theta, phi + 4 * kPi);
      ++report.samples;

      for (double a2 : {std::norm(base), std::norm(once), std::norm(twice)}) {
        min_abs2 = std::min(min_abs2, a2);
        max_abs2 = std::max(max_abs2, a2);
      }

      if (std::abs(base) < 1e-3 * scale) continue;
      report.max_ratio_error_2pi =
          std::max(report.max_ratio_error_2pi, std::abs(once / base - expected_2pi));
      report.max_ratio_error_4pi =
          std::max(report.max_ratio_error_4pi, std::abs(twice / base - 1.0));
    }
    report.max_abs2_spread =
        std::max(report.max_abs2_spread, (max_abs2 - min_abs2) / (scale * scale));
  }
  return report;
}

}  // namespace spinharm
