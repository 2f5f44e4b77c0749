#pragma once

#include "spinharm/trig_expr.hpp"

namespace spinharm {

/// cos(k*theta) as a polynomial in cos(theta), degree k.
TrigExpr chebyshev_T(unsigned k);

/// sin(k*theta)/sin(theta) as a polynomial in cos(theta), degree k-1;
/// chebyshev_U_shifted(0) is the zero expression.
TrigExpr chebyshev_U_shifted(unsigned k);

/// sin(k*theta) = sin(theta) * chebyshev_U_shifted(k).
TrigExpr sin_multiple(unsigned k);

}  // namespace spinharm
