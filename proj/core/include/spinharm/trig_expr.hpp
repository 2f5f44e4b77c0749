#pragma once

#include "spinharm/gaussian_rational.hpp"
#include "spinharm/half_integer.hpp"

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace spinharm {

// One monomial c * sin(theta)^p * cos(theta)^q * e^{i*mu*phi}. The sine power
// p and the frequency mu are half-integers (p may be negative); the cosine
// power q is a nonnegative integer.
struct TrigTerm {
  GaussianRational coeff;
  HalfInteger sin_pow;
  long long cos_pow = 0;
  HalfInteger phi_freq;

  friend bool operator==(const TrigTerm&, const TrigTerm&) = default;
};

// A finite sum of TrigTerms, always held in canonical form:
//   - terms are grouped by (phi_freq, sin_pow mod 2); within a group every
//     term carries the same sine power, obtained by rewriting
//     sin^2 = 1 - cos^2 until the cosine polynomial of the group is no
//     longer divisible by (1 - cos^2);
//   - cosine powers within a group are distinct, coefficients nonzero;
//   - terms are sorted by (phi_freq, sin_pow parity, sin_pow, cos_pow).
// Distinct canonical forms denote distinct functions on 0 < theta < pi, so
// operator== decides identities exactly. The zero function is the empty sum.
class TrigExpr {
 public:
  TrigExpr() = default;

  static TrigExpr term(GaussianRational coeff, HalfInteger sin_pow, long long cos_pow,
                       HalfInteger phi_freq);
  static TrigExpr from_terms(std::vector<TrigTerm> raw);

  const std::vector<TrigTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  TrigExpr scaled(const GaussianRational& s) const;

  friend TrigExpr operator+(const TrigExpr& a, const TrigExpr& b);
  friend TrigExpr operator-(const TrigExpr& a, const TrigExpr& b);
  friend TrigExpr operator*(const TrigExpr& a, const TrigExpr& b);
  TrigExpr operator-() const { return scaled(GaussianRational(-1)); }

  // Termwise partial derivatives; results are re-canonicalized.
  TrigExpr d_dtheta() const;
  TrigExpr d_dphi() const;

  /// Complex conjugate: conjugated coefficients, negated phi frequencies.
  TrigExpr conj() const;

  /// Requires 0 < theta < pi so half and negative sine powers stay real and
  /// finite; throws std::domain_error otherwise.
  std::complex<double> eval(double theta, double phi) const;

  friend bool operator==(const TrigExpr&, const TrigExpr&) = default;

  /// Readable ASCII, e.g. "(1/2-1/2i)*sin(th)^(5/2)*cos(th)^2*exp(i*(3/2)*phi)".
  std::string str() const;

 private:
  std::vector<TrigTerm> terms_;
};

inline TrigExpr canonicalize(std::vector<TrigTerm> raw) { return TrigExpr::from_terms(std::move(raw)); }

inline TrigExpr scale(const GaussianRational& c, const TrigExpr& e) { return e.scaled(c); }

inline std::complex<double> eval_expr(const TrigExpr& e, double theta, double phi) {
  return e.eval(theta, phi);
}

}  // namespace spinharm
