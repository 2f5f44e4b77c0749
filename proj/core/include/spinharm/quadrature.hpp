#pragma once

#include "spinharm/quantum_numbers.hpp"

#include <vector>

namespace spinharm {

struct QuadratureNode {
  double x;
  double w;
};

/// Gauss-Legendre nodes and weights on [-1, 1]; exact for polynomials of
/// degree <= 2n-1.
std::vector<QuadratureNode> gauss_legendre_nodes(int n);

/// Gauss-Chebyshev (second kind) nodes and weights for the weight function
/// sqrt(1-x²) on [-1, 1]; exact for polynomials of degree <= 2n-1.
std::vector<QuadratureNode> gauss_chebyshev2_nodes(int n);

/// Φ·∫₀^π |Y_qn|² sinθ dθ by substituting x = cosθ and integrating the
/// resulting polynomial exactly: Gauss-Legendre when m is an integer,
/// Gauss-Chebyshev second kind (weight sqrt(1-x²)) when m is half-odd.
/// Rejects node counts below the exactness bound n + |m| + 2.
double quadrature_norm(const QuantumNumbers& qn, int nodes);

}  // namespace spinharm
