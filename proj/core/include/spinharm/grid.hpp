#pragma once

#include <stdexcept>
#include <vector>

namespace spinharm {

// Evaluation grid for the finite-difference oracle. The theta window stays
// clear of the poles: negative sine powers in the symbolic results diverge
// there and the stencil would straddle the singularity. The default points
// are deliberately asymmetric about pi/2 and chosen so that no sample sits
// near a zero of any low-l operator result, where the relative-error metric
// would amplify stencil roundoff.
struct GridSpec {
  double theta_min = 0.75;
  double theta_max = 3.14159265358979323846 - 0.8;
  int n_theta = 6;
  std::vector<double> phi_points = {0.5, 2.1, 3.7};
  double h = 1e-4;

  void require_valid() const {
    constexpr double pi = 3.14159265358979323846;
    if (!(theta_min >= 0.05 && theta_max <= pi - 0.05 && theta_min < theta_max))
      throw std::invalid_argument("GridSpec: theta window must sit inside [0.05, pi-0.05]");
    if (n_theta < 1 || phi_points.empty()) throw std::invalid_argument("GridSpec: empty grid");
    if (!(h >= 1e-6 && h <= 1e-2)) throw std::invalid_argument("GridSpec: h outside [1e-6, 1e-2]");
  }

  std::vector<double> theta_points() const {
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(n_theta));
    for (int i = 0; i < n_theta; ++i)
      pts.push_back(n_theta == 1 ? (theta_min + theta_max) / 2
                                 : theta_min + (theta_max - theta_min) * i / (n_theta - 1));
    return pts;
  }
};

}  // namespace spinharm
