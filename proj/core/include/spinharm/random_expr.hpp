#pragma once

#include "spinharm/trig_expr.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace spinharm {

/// One random member of the closed function family: up to four terms with
/// small Gaussian-rational coefficients, sine powers in [-2, 3] (half steps),
/// cosine powers in [0, 3], phi frequencies in [-5/2, 5/2] (half steps).
/// Draws raw 64-bit values from the engine so sequences are identical across
/// standard libraries.
TrigExpr random_family_member(std::mt19937_64& rng);

std::vector<TrigExpr> random_family(std::uint64_t seed, std::size_t count);

}  // namespace spinharm
