#include "spinharm/quadrature.hpp"

#include "spinharm/harmonic.hpp"
#include "spinharm/legendre.hpp"

#include <cmath>
#include <stdexcept>

namespace spinharm {
namespace {

constexpr double kPi = 3.14159265358979323846;

// P_n(x) and its derivative by the standard three-term recurrence.
void legendre_value(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = n == 0 ? p0 : p1;
  dp = n == 0 ? 0.0 : n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

std::vector<QuadratureNode> gauss_legendre_nodes(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_nodes: n < 1");
  std::vector<QuadratureNode> nodes(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi-style initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre_value(n, x, p, dp);
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre_value(n, x, p, dp);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = {-x, w};
    nodes[static_cast<std::size_t>(n - 1 - i)] = {x, w};
  }
  if (n % 2 == 1) {
    double p = 0.0, dp = 1.0;
    legendre_value(n, 0.0, p, dp);
    nodes[static_cast<std::size_t>(n / 2)] = {0.0, 2.0 / (dp * dp)};
  }
  return nodes;
}

std::vector<QuadratureNode> gauss_chebyshev2_nodes(int n) {
  if (n < 1) throw std::invalid_argument("gauss_chebyshev2_nodes: n < 1");
  std::vector<QuadratureNode> nodes(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    double t = kPi * i / (n + 1);
    double s = std::sin(t);
    nodes[static_cast<std::size_t>(i - 1)] = {std::cos(t), kPi / (n + 1) * s * s};
  }
  return nodes;
}

double quadrature_norm(const QuantumNumbers& qn, int nodes) {
  qn.require_valid();
  LegendrePoly p = legendre_poly(qn.l, qn.m.abs());
  long long twice_abs_m = qn.m.abs().twice().convert_to<long long>();
  long long bound = p.order + (twice_abs_m + 1) / 2 + 2;  // ceil(n + |m|) + 2
  if (nodes < bound) throw std::invalid_argument("quadrature_norm: node count below degree bound");

  std::vector<double> coeffs(p.coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = to_double(p.coeffs[k]);
  auto poly_at = [&](double x) {
    double acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
  };

  // ∫₀^π sin^{2|m|+1} P² dθ = ∫_{-1}^{1} (1-x²)^{|m|} P(x)² dx.
  double integral = 0.0;
  if (qn.m.is_integer()) {
    long long mm = twice_abs_m / 2;
    for (const auto& node : gauss_legendre_nodes(nodes)) {
      double weight_part = std::pow(1.0 - node.x * node.x, static_cast<double>(mm));
      double pv = poly_at(node.x);
      integral += node.w * weight_part * pv * pv;
    }
  } else {
    // (1-x²)^{|m|} = sqrt(1-x²) · (1-x²)^{(2|m|-1)/2}; the sqrt is the
    // Chebyshev weight, the rest stays polynomial.
    long long mm = (twice_abs_m - 1) / 2;
    for (const auto& node : gauss_chebyshev2_nodes(nodes)) {
      double weight_part = std::pow(1.0 - node.x * node.x, static_cast<double>(mm));
      double pv = poly_at(node.x);
      integral += node.w * weight_part * pv * pv;
    }
  }
  return integral * phi_period_in_pi(qn) * kPi;
}

}  // namespace spinharm
