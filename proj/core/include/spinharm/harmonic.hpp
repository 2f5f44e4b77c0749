#pragma once

#include "spinharm/exact_value.hpp"
#include "spinharm/legendre.hpp"
#include "spinharm/quantum_numbers.hpp"
#include "spinharm/trig_expr.hpp"

namespace spinharm {

// Unnormalized harmonic Y_l^m = e^{i m phi} sin^{|m|}(theta) P(cos theta).
// The polynomial factor never vanishes at cos(theta) = ±1, so the canonical
// expr keeps exactly this shape: one phi frequency m, every sine power |m|.
struct Harmonic {
  QuantumNumbers qn;
  LegendrePoly poly;
  TrigExpr expr;
};

Harmonic make_harmonic(const QuantumNumbers& qn);

/// 4 for half-odd-integer m (phi runs two full circles before Y returns to
/// itself), 2 for integer m; units of π.
int phi_period_in_pi(const QuantumNumbers& qn);

/// ∫_0^π sin^a(θ) cos^b(θ) dθ for integer a ≥ 0 and even b ≥ 0, exactly:
/// rational for odd a, rational multiple of π for even a.
ExactValue wallis_integral(long long a, long long b);

/// Φ·∫_0^π |Y|² sinθ dθ with Φ the phi period; exact.
ExactValue norm_squared_integral(const QuantumNumbers& qn);

/// 1/sqrt(norm_squared_integral), in floating point.
double normalization_constant(const QuantumNumbers& qn);

}  // namespace spinharm
