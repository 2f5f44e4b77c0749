#pragma once

#include "spinharm/operator_kind.hpp"
#include "spinharm/trig_expr.hpp"

#include <array>
#include <optional>

namespace spinharm {

/// Exact symbolic application:
///   Mz = -i d/dphi
///   M2 = -(d²/dθ² + cotθ d/dθ + sin⁻²θ d²/dφ²)
///   M'± = e^{±iφ} (d/dθ ± i cotθ d/dφ)
///   Mx = (M'+ + M'-)/2,  My = (M'+ - M'-)/(2i), expanded in sinφ/cosφ form.
TrigExpr apply(OperatorKind kind, const TrigExpr& e);

struct EigenCheckResult {
  std::optional<GaussianRational> eigenvalue;
  TrigExpr residual;  // nonzero only when eigenvalue is absent
};

/// Tests apply(kind, e) ≡ λ·e. λ is read off the leading canonical term and
/// certified by exact global subtraction. Rejects zero input.
EigenCheckResult eigen_check(const TrigExpr& e, OperatorKind kind);

struct CommutatorReport {
  // Residuals of [Mx,My]f - i Mz f, [My,Mz]f - i Mx f, [Mz,Mx]f - i My f,
  // and [M2,Mz]f; all must canonicalize to zero.
  std::array<TrigExpr, 4> residuals;
  bool all_zero() const;
};

CommutatorReport commutator_check(const TrigExpr& f);

}  // namespace spinharm
