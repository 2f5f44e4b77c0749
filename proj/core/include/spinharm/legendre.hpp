#pragma once

#include "spinharm/quantum_numbers.hpp"
#include "spinharm/rational.hpp"

#include <vector>

namespace spinharm {

// Polynomial factor P(x), x = cos(theta), of the harmonic
// e^{i m phi} sin^{|m|}(theta) P(cos theta). Degree n = l - |m|; only the
// parity class of n is populated and the lowest nonzero coefficient is 1.
struct LegendrePoly {
  std::vector<Rational> coeffs;  // coeffs[k] multiplies x^k
  long long order = 0;           // n = l - |m|

  Rational eval_at_one() const;

  friend bool operator==(const LegendrePoly&, const LegendrePoly&) = default;
};

// Ratio a_{k+2}/a_k of the power-series solution of the theta equation
//   (1-x^2) P'' - 2(|m|+1) x P' + [l(l+1) - |m|(|m|+1)] P = 0,
// which is what M^2 Y = l(l+1) Y becomes after peeling off the
// e^{i m phi} sin^{|m|} prefactor:
//   a_{k+2} = a_k * [(k+|m|)(k+|m|+1) - l(l+1)] / [(k+1)(k+2)].
// The numerator vanishes exactly at k = n, so the series is the degree-n
// polynomial and a_{n+2} = 0.
Rational series_ratio(const HalfInteger& l, const HalfInteger& abs_m, long long k);

/// Throws std::invalid_argument unless abs_m >= 0 and n = l - abs_m is a
/// nonnegative integer.
LegendrePoly legendre_poly(const HalfInteger& l, const HalfInteger& abs_m);

}  // namespace spinharm
