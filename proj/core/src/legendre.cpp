#include "spinharm/legendre.hpp"

#include <stdexcept>

namespace spinharm {

Rational LegendrePoly::eval_at_one() const {
  Rational sum = 0;
  for (const auto& c : coeffs) sum += c;
  return sum;
}

Rational series_ratio(const HalfInteger& l, const HalfInteger& abs_m, long long k) {
  Rational km = abs_m.to_rational() + k;
  Rational num = km * (km + 1) - l_times_l_plus_one(l);
  Rational den = Rational(k + 1) * (k + 2);
  return num / den;
}

LegendrePoly legendre_poly(const HalfInteger& l, const HalfInteger& abs_m) {
  if (abs_m.is_negative()) throw std::invalid_argument("legendre_poly: abs_m < 0");
  HalfInteger diff = l - abs_m;
  if (!diff.is_integer() || diff.is_negative())
    throw std::invalid_argument("legendre_poly: l - abs_m must be a nonnegative integer");
  long long n = diff.to_integer();

  LegendrePoly p;
  p.order = n;
  p.coeffs.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  long long k = n % 2;
  p.coeffs[static_cast<std::size_t>(k)] = 1;
  for (; k + 2 <= n; k += 2)
    p.coeffs[static_cast<std::size_t>(k + 2)] =
        p.coeffs[static_cast<std::size_t>(k)] * series_ratio(l, abs_m, k);
  return p;
}

}  // namespace spinharm
