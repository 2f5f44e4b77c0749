#include "spinharm/gaussian_rational.hpp"

namespace spinharm {

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (!re_.is_zero()) out = to_string(re_);
  if (!im_.is_zero()) {
    std::string imag;
    if (im_ == Rational(1))
      imag = "i";
    else if (im_ == Rational(-1))
      imag = "-i";
    else
      imag = to_string(im_) + "i";
    if (out.empty())
      out = imag;
    else if (imag[0] == '-')
      out += imag;
    else
      out += "+" + imag;
  }
  return out;
}

}  // namespace spinharm
