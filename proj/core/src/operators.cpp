#include "spinharm/operators.hpp"

#include <stdexcept>

namespace spinharm {
namespace {

const GaussianRational kI = GaussianRational::i();

TrigExpr unit_term(long long sin_pow, long long cos_pow, long long phi_twice) {
  return TrigExpr::term(GaussianRational(1), HalfInteger::whole(sin_pow), cos_pow,
                        HalfInteger::from_twice(BigInt(phi_twice)));
}

// cot(theta) * d/dphi, shared by M'±, Mx, My.
TrigExpr cot_dphi(const TrigExpr& e) {
  static const TrigExpr cot = unit_term(-1, 1, 0);
  return cot * e.d_dphi();
}

TrigExpr apply_mz(const TrigExpr& e) { return e.d_dphi().scaled(-kI); }

TrigExpr apply_m2(const TrigExpr& e) {
  static const TrigExpr cot = unit_term(-1, 1, 0);
  static const TrigExpr inv_sin2 = unit_term(-2, 0, 0);
  TrigExpr sum = e.d_dtheta().d_dtheta() + cot * e.d_dtheta() + inv_sin2 * e.d_dphi().d_dphi();
  return sum.scaled(GaussianRational(-1));
}

TrigExpr apply_ladder(const TrigExpr& e, bool raising) {
  static const TrigExpr phase_up = unit_term(0, 0, 2);
  static const TrigExpr phase_down = unit_term(0, 0, -2);
  TrigExpr inner = raising ? e.d_dtheta() + cot_dphi(e).scaled(kI)
                           : e.d_dtheta() - cot_dphi(e).scaled(kI);
  return (raising ? phase_up : phase_down) * inner;
}

// sin(phi) = (e^{i phi} - e^{-i phi})/(2i), cos(phi) = (e^{i phi} + e^{-i phi})/2.
const TrigExpr& sin_phi() {
  static const TrigExpr e = unit_term(0, 0, 2).scaled(-kI * GaussianRational(Rational(1, 2))) +
                            unit_term(0, 0, -2).scaled(kI * GaussianRational(Rational(1, 2)));
  return e;
}

const TrigExpr& cos_phi() {
  static const TrigExpr e =
      (unit_term(0, 0, 2) + unit_term(0, 0, -2)).scaled(GaussianRational(Rational(1, 2)));
  return e;
}

TrigExpr apply_mx(const TrigExpr& e) {
  // Mx = i sin(phi) d/dtheta + i cot(theta) cos(phi) d/dphi.
  return (sin_phi() * e.d_dtheta() + cos_phi() * cot_dphi(e)).scaled(kI);
}

TrigExpr apply_my(const TrigExpr& e) {
  // My = -i cos(phi) d/dtheta + i cot(theta) sin(phi) d/dphi.
  return (cos_phi() * e.d_dtheta()).scaled(-kI) + (sin_phi() * cot_dphi(e)).scaled(kI);
}

}  // namespace

const char* operator_name(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Mx: return "Mx";
    case OperatorKind::My: return "My";
    case OperatorKind::Mz: return "Mz";
    case OperatorKind::M2: return "M2";
    case OperatorKind::MplusPrime: return "M+'";
    case OperatorKind::MminusPrime: return "M-'";
  }
  return "?";
}

TrigExpr apply(OperatorKind kind, const TrigExpr& e) {
  switch (kind) {
    case OperatorKind::Mx: return apply_mx(e);
    case OperatorKind::My: return apply_my(e);
    case OperatorKind::Mz: return apply_mz(e);
    case OperatorKind::M2: return apply_m2(e);
    case OperatorKind::MplusPrime: return apply_ladder(e, true);
    case OperatorKind::MminusPrime: return apply_ladder(e, false);
  }
  throw std::logic_error("apply: unknown operator kind");
}

EigenCheckResult eigen_check(const TrigExpr& e, OperatorKind kind) {
  if (e.is_zero()) throw std::invalid_argument("eigen_check: zero input");
  TrigExpr g = apply(kind, e);
  if (g.is_zero()) return {GaussianRational(0), TrigExpr{}};

  // Candidate eigenvalue from the leading term of g matched against the term
  // of e with the same monomial key; absence of a match means no eigenvalue.
  const TrigTerm& lead = g.terms().front();
  for (const TrigTerm& t : e.terms()) {
    if (t.sin_pow == lead.sin_pow && t.cos_pow == lead.cos_pow && t.phi_freq == lead.phi_freq) {
      GaussianRational lambda = lead.coeff / t.coeff;
      TrigExpr residual = g - e.scaled(lambda);
      if (residual.is_zero()) return {lambda, TrigExpr{}};
      return {std::nullopt, std::move(residual)};
    }
  }
  return {std::nullopt, std::move(g)};
}

bool CommutatorReport::all_zero() const {
  for (const auto& r : residuals)
    if (!r.is_zero()) return false;
  return true;
}

CommutatorReport commutator_check(const TrigExpr& f) {
  auto comm = [&](OperatorKind a, OperatorKind b) {
    return apply(a, apply(b, f)) - apply(b, apply(a, f));
  };
  CommutatorReport rep;
  rep.residuals[0] = comm(OperatorKind::Mx, OperatorKind::My) - apply(OperatorKind::Mz, f).scaled(kI);
  rep.residuals[1] = comm(OperatorKind::My, OperatorKind::Mz) - apply(OperatorKind::Mx, f).scaled(kI);
  rep.residuals[2] = comm(OperatorKind::Mz, OperatorKind::Mx) - apply(OperatorKind::My, f).scaled(kI);
  rep.residuals[3] = comm(OperatorKind::M2, OperatorKind::Mz);
  return rep;
}

}  // namespace spinharm
