#include "spinharm/exact_value.hpp"

#include <stdexcept>

namespace spinharm {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ExactValue ExactValue::times_pi() const {
  if (pi2 != 0) throw std::domain_error("ExactValue: pi^3 is outside the representable set");
  return {Rational(0), rat, pi};
}

double ExactValue::to_double() const {
  return spinharm::to_double(rat) + spinharm::to_double(pi) * kPi +
         spinharm::to_double(pi2) * kPi * kPi;
}

std::string ExactValue::str() const {
  std::string out;
  auto append = [&](const Rational& c, const char* suffix) {
    if (c == 0) return;
    std::string piece = to_string(c);
    if (!out.empty()) {
      if (piece[0] == '-') {
        out += " - ";
        piece.erase(piece.begin());
      } else {
        out += " + ";
      }
    }
    out += piece + suffix;
  };
  append(rat, "");
  append(pi, "*pi");
  append(pi2, "*pi^2");
  return out.empty() ? "0" : out;
}

}  // namespace spinharm
