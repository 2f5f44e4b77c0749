#include "spinharm/harmonic.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spinharm {

Harmonic make_harmonic(const QuantumNumbers& qn) {
  qn.require_valid();
  Harmonic h;
  h.qn = qn;
  h.poly = legendre_poly(qn.l, qn.m.abs());
  std::vector<TrigTerm> raw;
  for (std::size_t k = 0; k < h.poly.coeffs.size(); ++k) {
    if (h.poly.coeffs[k] == 0) continue;
    raw.push_back(TrigTerm{GaussianRational(h.poly.coeffs[k]), qn.m.abs(),
                           static_cast<long long>(k), qn.m});
  }
  h.expr = TrigExpr::from_terms(std::move(raw));
  return h;
}

int phi_period_in_pi(const QuantumNumbers& qn) { return qn.m.is_half_odd() ? 4 : 2; }

ExactValue wallis_integral(long long a, long long b) {
  if (a < 0 || b < 0 || b % 2 != 0)
    throw std::invalid_argument("wallis_integral: need a >= 0 and even b >= 0");
  // W(a, b) = W(a, b-2) * (b-1)/(a+b), down to the pure sine integral
  // W(a, 0) = pi * (a-1)!!/a!! for even a, 2 * (a-1)!!/a!! for odd a.
  Rational factor = 1;
  for (long long bb = b; bb >= 2; bb -= 2) factor *= Rational(bb - 1, a + bb);
  Rational sine_part = 1;
  for (long long aa = a; aa >= 2; aa -= 2) sine_part *= Rational(aa - 1, aa);
  if (a % 2 == 0) return ExactValue{Rational(0), factor * sine_part, Rational(0)};
  return ExactValue{factor * sine_part * 2, Rational(0), Rational(0)};
}

ExactValue norm_squared_integral(const QuantumNumbers& qn) {
  qn.require_valid();
  LegendrePoly p = legendre_poly(qn.l, qn.m.abs());
  // |Y|^2 sin(theta) = sin^{2|m|+1} * P(cos)^2; P^2 has only even powers
  // populated because P lives in a single parity class.
  std::vector<Rational> sq(2 * p.coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.coeffs.size(); ++i)
    for (std::size_t j = 0; j < p.coeffs.size(); ++j) sq[i + j] += p.coeffs[i] * p.coeffs[j];

  long long a = qn.m.abs().twice().convert_to<long long>() + 1;
  ExactValue theta_integral;
  for (std::size_t b = 0; b < sq.size(); b += 2)
    theta_integral += wallis_integral(a, static_cast<long long>(b)).scaled(sq[b]);

  return theta_integral.times_pi().scaled(Rational(phi_period_in_pi(qn)));
}

double normalization_constant(const QuantumNumbers& qn) {
  return 1.0 / std::sqrt(norm_squared_integral(qn).to_double());
}

}  // namespace spinharm
