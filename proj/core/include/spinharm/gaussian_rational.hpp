#pragma once

#include "spinharm/rational.hpp"

#include <complex>
#include <stdexcept>
#include <string>

namespace spinharm {

// Exact complex number a + b*i with rational a, b. This is the coefficient
// field of the whole symbolic layer; identities are certified by exact
// cancellation in this field, never by tolerances.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit by design
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long long re) : re_(re) {}  // NOLINT

  static GaussianRational i() { return GaussianRational(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational abs_squared() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.abs_squared();
    if (n == 0) throw std::domain_error("GaussianRational: division by zero");
    GaussianRational num = a * b.conj();
    return {num.re_ / n, num.im_ / n};
  }

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

  std::complex<double> to_complex() const { return {to_double(re_), to_double(im_)}; }

  /// "0", "3/2", "-i", "2i", "1+i", "1/2-3/4i".
  std::string str() const;

 private:
  Rational re_ = 0;
  Rational im_ = 0;
};

}  // namespace spinharm
