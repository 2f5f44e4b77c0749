#pragma once

#include "spinharm/harmonic.hpp"
#include "spinharm/operators.hpp"

#include <string>
#include <variant>

namespace spinharm {

enum class LadderDirection { Up, Down };

const char* direction_name(LadderDirection dir);

struct Annihilated {};

struct Proportional {
  GaussianRational constant;
  QuantumNumbers target;  // result == constant * Y_target
};

struct Anomalous {
  long long k = 0;  // positive; the multiple angle in cot(k*theta)
  Rational scale;
  QuantumNumbers target;  // result == scale * cot(k*theta) * Y_target
};

struct OtherOutcome {
  TrigExpr residual;
};

using LadderOutcome = std::variant<Annihilated, Proportional, Anomalous, OtherOutcome>;

struct LadderResult {
  QuantumNumbers from;
  LadderDirection dir;
  TrigExpr raw;  // apply(M'±, Y_from), uninterpreted
  LadderOutcome outcome;
};

// Applies the raising (up) or lowering (down) ladder operator to Y_qn and
// classifies the result. The Anomalous branch never represents cot(k*theta)
// itself; it certifies the denominator-cleared identity
//   raw * sin(k*theta) - scale * cos(k*theta) * Y_target == 0
// exactly, via the Chebyshev expansions of sin(k*theta) and cos(k*theta).
LadderResult ladder_classify(const QuantumNumbers& qn, LadderDirection dir);

/// Radicand of the abstract-theory ladder magnitude sqrt[(l∓m)(l±m+1)] for
/// normalized states; reporting only; the constants produced on the
/// unnormalized family are convention-bound and differ.
Rational ladder_constant_expected(const HalfInteger& l, const HalfInteger& m, LadderDirection dir);

/// "1", "2", "sqrt(2)", "sqrt(8)": exact square roots are simplified.
std::string format_sqrt(const Rational& radicand);

/// apply(M'-, apply(M'-, Y_l^{1/2})): the double lowering step whose
/// nonvanishing coexists with the exact annihilation M'- Y_l^{-l} = 0.
TrigExpr merzbacher_double_step(const HalfInteger& l);

}  // namespace spinharm
