#include "spinharm/oracle.hpp"

#include "spinharm/operators.hpp"

#include <algorithm>
#include <cmath>

namespace spinharm {

OracleReport oracle_compare(OperatorKind kind, const TrigExpr& e, const GridSpec& grid) {
  grid.require_valid();
  OracleReport report;
  report.op = kind;
  report.h = grid.h;

  TrigExpr exact = apply(kind, e);
  report.symbolic_zero = exact.is_zero();

  for (double theta : grid.theta_points()) {
    for (double phi : grid.phi_points) {
      std::complex<double> want = exact.eval(theta, phi);
      std::complex<double> got = fd_apply(kind, e, theta, phi, grid.h);
      double abs_err = std::abs(got - want);
      double rel_err = abs_err / std::max(std::abs(want), 1e-10);
      report.max_abs_error = std::max(report.max_abs_error, abs_err);
      if (rel_err > report.max_rel_error) {
        report.max_rel_error = rel_err;
        report.worst_theta = theta;
        report.worst_phi = phi;
      }
      ++report.samples;
    }
  }
  return report;
}

}  // namespace spinharm
