#pragma once

#include "spinharm/operator_kind.hpp"
#include "spinharm/trig_expr.hpp"

#include <complex>

namespace spinharm {

/// Numerical application of an operator through 4th-order central
/// differences on eval samples of e alone; no symbolic differentiation is
/// involved, which is what makes this an independent oracle.
/// Requires 2h < theta < pi - 2h and h in [1e-6, 1e-2].
std::complex<double> fd_apply(OperatorKind kind, const TrigExpr& e, double theta, double phi,
                              double h);

}  // namespace spinharm
