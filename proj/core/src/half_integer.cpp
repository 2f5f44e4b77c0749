#include "spinharm/half_integer.hpp"

#include <cctype>
#include <stdexcept>

namespace spinharm {

std::string to_string(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  std::string s = num.str();
  if (den != 1) {
    s += '/';
    s += den.str();
  }
  return s;
}

Rational parse_rational(std::string_view s) {
  auto bad = [&] { throw std::invalid_argument("not a rational: '" + std::string(s) + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  auto parse_int = [&](std::string_view piece) -> BigInt {
    if (piece.empty()) bad();
    std::size_t start = (piece[0] == '+' || piece[0] == '-') ? 1 : 0;
    if (start == piece.size()) bad();
    for (std::size_t i = start; i < piece.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(piece[i]))) bad();
    return BigInt(std::string(piece));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) bad();
  return Rational(num, den);
}

long long HalfInteger::to_integer() const {
  if (!is_integer()) throw std::domain_error("HalfInteger::to_integer on half-odd value " + str());
  BigInt q = twice_ / 2;
  return q.convert_to<long long>();
}

std::string HalfInteger::str() const {
  if (is_integer()) return BigInt(twice_ / 2).str();
  return twice_.str() + "/2";
}

std::optional<HalfInteger> HalfInteger::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return std::nullopt;

  auto digits_only = [](std::string_view piece) {
    if (piece.empty()) return false;
    for (char c : piece)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  BigInt twice;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!digits_only(num) || (den != "1" && den != "2")) return std::nullopt;
    twice = BigInt(std::string(num));
    if (den == "1") twice *= 2;
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (!digits_only(whole) || frac.empty()) return std::nullopt;
    // Only .0* and .5(0*) denote exact multiples of one half.
    bool is_half;
    if (frac[0] == '0')
      is_half = false;
    else if (frac[0] == '5')
      is_half = true;
    else
      return std::nullopt;
    for (std::size_t i = 1; i < frac.size(); ++i)
      if (frac[i] != '0') return std::nullopt;
    twice = BigInt(std::string(whole)) * 2 + (is_half ? 1 : 0);
  } else {
    if (!digits_only(s)) return std::nullopt;
    twice = BigInt(std::string(s)) * 2;
  }
  if (negative) twice = -twice;
  return HalfInteger::from_twice(twice);
}

}  // namespace spinharm
