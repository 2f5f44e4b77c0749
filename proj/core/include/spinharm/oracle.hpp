#pragma once

#include "spinharm/fd_stencil.hpp"
#include "spinharm/grid.hpp"
#include "spinharm/operator_kind.hpp"
#include "spinharm/trig_expr.hpp"

namespace spinharm {

struct OracleReport {
  OperatorKind op = OperatorKind::Mz;
  double max_rel_error = 0.0;  // |fd - exact| / max(|exact|, 1e-10), maximized
  double worst_theta = 0.0;
  double worst_phi = 0.0;
  long long samples = 0;
  double h = 0.0;
  // When the symbolic result is identically zero the relative metric divides
  // stencil roundoff by the floor and is meaningless; callers should bound
  // max_abs_error instead.
  bool symbolic_zero = false;
  double max_abs_error = 0.0;
};

/// Compares fd_apply(kind, e, ·) against the evaluated symbolic application
/// of the same operator over the grid.
OracleReport oracle_compare(OperatorKind kind, const TrigExpr& e, const GridSpec& grid);

}  // namespace spinharm
