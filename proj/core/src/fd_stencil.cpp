// Finite-difference side of the oracle. This translation unit deliberately
// sees only TrigExpr::eval; the symbolic operators must never leak in here.
#include "spinharm/fd_stencil.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace spinharm {
namespace {

using Complex = std::complex<double>;
using Samples = std::function<Complex(double)>;

// (8*(g(+h)-g(-h)) - (g(+2h)-g(-2h))) / 12h. Grouped as differences so that
// a direction the function does not depend on yields an exact zero.
Complex d1(const Samples& g, double x, double h) {
  return (8.0 * (g(x + h) - g(x - h)) - (g(x + 2 * h) - g(x - 2 * h))) / (12.0 * h);
}

// (16*[(g(+h)-g0) + (g(-h)-g0)] - [(g(+2h)-g0) + (g(-2h)-g0)]) / 12h².
Complex d2(const Samples& g, double x, double h) {
  Complex g0 = g(x);
  Complex near = (g(x + h) - g0) + (g(x - h) - g0);
  Complex far = (g(x + 2 * h) - g0) + (g(x - 2 * h) - g0);
  return (16.0 * near - far) / (12.0 * h * h);
}

}  // namespace

std::complex<double> fd_apply(OperatorKind kind, const TrigExpr& e, double theta, double phi,
                              double h) {
  constexpr double pi = 3.14159265358979323846;
  if (!(h >= 1e-6 && h <= 1e-2)) throw std::invalid_argument("fd_apply: h outside [1e-6, 1e-2]");
  if (!(theta > 2 * h && theta < pi - 2 * h))
    throw std::invalid_argument("fd_apply: theta too close to a pole for the stencil");

  const Complex i{0.0, 1.0};
  const double cot = std::cos(theta) / std::sin(theta);
  Samples along_theta = [&](double t) { return e.eval(t, phi); };
  Samples along_phi = [&](double p) { return e.eval(theta, p); };

  switch (kind) {
    case OperatorKind::Mz:
      return -i * d1(along_phi, phi, h);
    case OperatorKind::M2: {
      const double inv_sin2 = 1.0 / (std::sin(theta) * std::sin(theta));
      return -(d2(along_theta, theta, h) + cot * d1(along_theta, theta, h) +
               inv_sin2 * d2(along_phi, phi, h));
    }
    case OperatorKind::MplusPrime:
      return std::exp(i * phi) * (d1(along_theta, theta, h) + i * cot * d1(along_phi, phi, h));
    case OperatorKind::MminusPrime:
      return std::exp(-i * phi) * (d1(along_theta, theta, h) - i * cot * d1(along_phi, phi, h));
    case OperatorKind::Mx:
      return i * std::sin(phi) * d1(along_theta, theta, h) +
             i * cot * std::cos(phi) * d1(along_phi, phi, h);
    case OperatorKind::My:
      return -i * std::cos(phi) * d1(along_theta, theta, h) +
             i * cot * std::sin(phi) * d1(along_phi, phi, h);
  }
  throw std::logic_error("fd_apply: unknown operator kind");
}

}  // namespace spinharm
