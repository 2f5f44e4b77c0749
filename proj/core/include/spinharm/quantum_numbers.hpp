#pragma once

#include "spinharm/half_integer.hpp"

#include <stdexcept>
#include <vector>

namespace spinharm {

// Valid pair (l, m): l >= 0, -l <= m <= l, and l - m an integer, so the
// polynomial order n = l - |m| is a nonnegative integer in both the integer
// and the half-odd-integer sector.
struct QuantumNumbers {
  HalfInteger l;
  HalfInteger m;

  bool valid() const {
    return !l.is_negative() && m.abs() <= l && (l - m).is_integer();
  }

  /// Polynomial order n = l - |m|.
  long long order() const { return (l - m.abs()).to_integer(); }

  void require_valid() const {
    if (!valid())
      throw std::invalid_argument("invalid quantum numbers (l=" + l.str() + ", m=" + m.str() + ")");
  }

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Every valid (l, m) with l <= l_max, both sectors, l ascending then m ascending.
inline std::vector<QuantumNumbers> states_up_to(const HalfInteger& l_max) {
  std::vector<QuantumNumbers> out;
  for (BigInt tl = 0; tl <= l_max.twice(); ++tl) {
    HalfInteger l = HalfInteger::from_twice(tl);
    for (BigInt tm = -tl; tm <= tl; tm += 2) out.push_back({l, HalfInteger::from_twice(tm)});
  }
  return out;
}

inline std::vector<QuantumNumbers> half_odd_states_up_to(const HalfInteger& l_max) {
  std::vector<QuantumNumbers> out;
  for (const auto& qn : states_up_to(l_max))
    if (qn.l.is_half_odd()) out.push_back(qn);
  return out;
}

inline std::vector<QuantumNumbers> integer_states_up_to(const HalfInteger& l_max) {
  std::vector<QuantumNumbers> out;
  for (const auto& qn : states_up_to(l_max))
    if (qn.l.is_integer()) out.push_back(qn);
  return out;
}

}  // namespace spinharm
