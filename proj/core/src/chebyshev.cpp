#include "spinharm/chebyshev.hpp"

namespace spinharm {
namespace {

const TrigExpr& cos_theta() {
  static const TrigExpr c = TrigExpr::term(GaussianRational(1), HalfInteger(), 1, HalfInteger());
  return c;
}

// Shared three-term recurrence p_{k+1} = 2*cos(th)*p_k - p_{k-1}.
TrigExpr recur(unsigned k, const TrigExpr& p0, const TrigExpr& p1) {
  if (k == 0) return p0;
  TrigExpr prev = p0;
  TrigExpr cur = p1;
  for (unsigned i = 1; i < k; ++i) {
    TrigExpr next = (cos_theta() * cur).scaled(GaussianRational(2)) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

TrigExpr chebyshev_T(unsigned k) {
  const TrigExpr one = TrigExpr::term(GaussianRational(1), HalfInteger(), 0, HalfInteger());
  return recur(k, one, cos_theta());
}

TrigExpr chebyshev_U_shifted(unsigned k) {
  const TrigExpr zero;
  const TrigExpr one = TrigExpr::term(GaussianRational(1), HalfInteger(), 0, HalfInteger());
  return recur(k, zero, one);
}

TrigExpr sin_multiple(unsigned k) {
  const TrigExpr sin_theta =
      TrigExpr::term(GaussianRational(1), HalfInteger::whole(1), 0, HalfInteger());
  return sin_theta * chebyshev_U_shifted(k);
}

}  // namespace spinharm
