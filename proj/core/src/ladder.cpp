#include "spinharm/ladder.hpp"

#include "spinharm/chebyshev.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <utility>

namespace spinharm {
namespace {

// lambda with a == lambda * b, when such a scalar exists.
std::optional<GaussianRational> proportionality_ratio(const TrigExpr& a, const TrigExpr& b) {
  if (a.is_zero()) return GaussianRational(0);
  if (b.is_zero()) return std::nullopt;
  const TrigTerm& lead = a.terms().front();
  for (const TrigTerm& t : b.terms()) {
    if (t.sin_pow == lead.sin_pow && t.cos_pow == lead.cos_pow && t.phi_freq == lead.phi_freq) {
      GaussianRational lambda = lead.coeff / t.coeff;
      if ((a - b.scaled(lambda)).is_zero()) return lambda;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

const char* direction_name(LadderDirection dir) {
  return dir == LadderDirection::Up ? "up" : "down";
}

LadderResult ladder_classify(const QuantumNumbers& qn, LadderDirection dir) {
  qn.require_valid();
  const bool up = dir == LadderDirection::Up;
  Harmonic from = make_harmonic(qn);

  LadderResult res;
  res.from = qn;
  res.dir = dir;
  res.raw = apply(up ? OperatorKind::MplusPrime : OperatorKind::MminusPrime, from.expr);

  if (res.raw.is_zero()) {
    res.outcome = Annihilated{};
    return res;
  }

  QuantumNumbers target{qn.l, up ? qn.m + HalfInteger::whole(1) : qn.m - HalfInteger::whole(1)};
  if (!target.valid()) {
    res.outcome = OtherOutcome{res.raw};
    return res;
  }
  Harmonic to = make_harmonic(target);

  if (auto lambda = proportionality_ratio(res.raw, to.expr)) {
    res.outcome = Proportional{*lambda, target};
    return res;
  }

  if (qn.l.is_half_odd()) {
    long long k = (qn.l + HalfInteger::from_twice(1)).to_integer();
    TrigExpr cleared = res.raw * sin_multiple(static_cast<unsigned>(k));
    TrigExpr reference = chebyshev_T(static_cast<unsigned>(k)) * to.expr;
    if (auto scale = proportionality_ratio(cleared, reference); scale && scale->is_real()) {
      res.outcome = Anomalous{k, scale->re(), target};
      return res;
    }
  }

  res.outcome = OtherOutcome{res.raw};
  return res;
}

Rational ladder_constant_expected(const HalfInteger& l, const HalfInteger& m,
                                  LadderDirection dir) {
  Rational lv = l.to_rational();
  Rational mv = m.to_rational();
  if (dir == LadderDirection::Up) return (lv - mv) * (lv + mv + 1);
  return (lv + mv) * (lv - mv + 1);
}

std::string format_sqrt(const Rational& radicand) {
  if (radicand < 0) throw std::invalid_argument("format_sqrt: negative radicand");
  BigInt num = numerator(radicand);
  BigInt den = denominator(radicand);
  BigInt rn = boost::multiprecision::sqrt(num);
  BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn == num && rd * rd == den) return to_string(Rational(rn, rd));
  return "sqrt(" + to_string(radicand) + ")";
}

TrigExpr merzbacher_double_step(const HalfInteger& l) {
  Harmonic start = make_harmonic({l, HalfInteger::from_twice(1)});
  return apply(OperatorKind::MminusPrime,
               apply(OperatorKind::MminusPrime, start.expr));
}

}  // namespace spinharm
