#pragma once

#include "spinharm/rational.hpp"

namespace spinharm {

// Exact number of the form rat + pi*π + pi2*π². Closed under the addition
// and rational scaling the normalization integrals need: the θ-integral of
// an even sine power contributes a π, and the φ-period contributes another.
struct ExactValue {
  Rational rat;
  Rational pi;
  Rational pi2;

  bool is_zero() const { return rat == 0 && pi == 0 && pi2 == 0; }

  friend ExactValue operator+(const ExactValue& a, const ExactValue& b) {
    return {a.rat + b.rat, a.pi + b.pi, a.pi2 + b.pi2};
  }
  ExactValue& operator+=(const ExactValue& o) { return *this = *this + o; }

  ExactValue scaled(const Rational& c) const { return {rat * c, pi * c, pi2 * c}; }

  /// Multiplication by a pure power of π; raising above π² is rejected.
  ExactValue times_pi() const;

  friend bool operator==(const ExactValue&, const ExactValue&) = default;

  double to_double() const;

  /// "0", "2/3", "4/3*pi", "2*pi^2", "1/2 + 3/4*pi".
  std::string str() const;
};

}  // namespace spinharm
