#include "spinharm/trig_expr.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace spinharm {
namespace {

constexpr double kPi = 3.14159265358979323846;

double ipow(double base, long long exp) {
  double out = 1.0;
  while (exp > 0) {
    if (exp & 1) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

// Coefficients of the cosine polynomial of one (phi_freq, parity) group,
// indexed by cosine power.
using CosPoly = std::vector<GaussianRational>;

void trim(CosPoly& q) {
  while (!q.empty() && q.back().is_zero()) q.pop_back();
}

// Divides q (assumed divisible) by 1 - c^2 = -(c - 1)(c + 1) in place.
void deflate_one_minus_c2(CosPoly& q) {
  for (int root : {1, -1}) {
    const GaussianRational r{Rational(root)};
    GaussianRational carry;
    for (std::size_t k = q.size(); k-- > 0;) {
      GaussianRational b = q[k] + r * carry;
      q[k] = carry;
      carry = b;
    }
    assert(carry.is_zero());
    if (!q.empty()) q.pop_back();
  }
  for (auto& c : q) c = -c;
  trim(q);
}

}  // namespace

TrigExpr TrigExpr::term(GaussianRational coeff, HalfInteger sin_pow, long long cos_pow,
                        HalfInteger phi_freq) {
  return from_terms({TrigTerm{std::move(coeff), sin_pow, cos_pow, phi_freq}});
}

TrigExpr TrigExpr::from_terms(std::vector<TrigTerm> raw) {
  struct Group {
    HalfInteger base_sin;
    std::vector<const TrigTerm*> members;
  };
  std::map<std::pair<BigInt, int>, Group> groups;

  for (const TrigTerm& t : raw) {
    if (t.coeff.is_zero()) continue;
    if (t.cos_pow < 0) throw std::invalid_argument("TrigExpr: negative cosine power");
    auto key = std::make_pair(t.phi_freq.twice(), t.sin_pow.parity_class());
    auto [it, fresh] = groups.try_emplace(key, Group{t.sin_pow, {}});
    if (!fresh && t.sin_pow < it->second.base_sin) it->second.base_sin = t.sin_pow;
    it->second.members.push_back(&t);
  }

  TrigExpr out;
  for (auto& [key, group] : groups) {
    // Expand every member down to the group's lowest sine power through
    // sin^{p} = sin^{base} * (1 - cos^2)^d.
    CosPoly poly;
    for (const TrigTerm* t : group.members) {
      BigInt gap = (t->sin_pow.twice() - group.base_sin.twice()) / 4;
      auto d = gap.convert_to<long long>();
      BigInt binom = 1;
      for (long long j = 0; j <= d; ++j) {
        auto k = static_cast<std::size_t>(t->cos_pow + 2 * j);
        if (poly.size() <= k) poly.resize(k + 1);
        Rational signed_binom(binom);
        if (j % 2 == 1) signed_binom = -signed_binom;
        poly[k] += t->coeff * GaussianRational(signed_binom);
        binom = binom * (d - j) / (j + 1);
      }
    }
    trim(poly);
    if (poly.empty()) continue;

    // Pull every full factor of 1 - cos^2 back into the sine power, so the
    // representative of each group is unique.
    HalfInteger sin_pow = group.base_sin;
    for (;;) {
      GaussianRational at_one, at_minus_one;
      for (std::size_t k = 0; k < poly.size(); ++k) {
        at_one += poly[k];
        at_minus_one += (k % 2 == 0) ? poly[k] : -poly[k];
      }
      if (!at_one.is_zero() || !at_minus_one.is_zero()) break;
      deflate_one_minus_c2(poly);
      sin_pow = sin_pow + HalfInteger::whole(2);
    }

    for (std::size_t k = 0; k < poly.size(); ++k) {
      if (poly[k].is_zero()) continue;
      out.terms_.push_back(TrigTerm{poly[k], sin_pow, static_cast<long long>(k),
                                    HalfInteger::from_twice(key.first)});
    }
  }

  std::sort(out.terms_.begin(), out.terms_.end(), [](const TrigTerm& a, const TrigTerm& b) {
    if (a.phi_freq != b.phi_freq) return a.phi_freq < b.phi_freq;
    if (int pa = a.sin_pow.parity_class(), pb = b.sin_pow.parity_class(); pa != pb) return pa < pb;
    if (a.sin_pow != b.sin_pow) return a.sin_pow < b.sin_pow;
    return a.cos_pow < b.cos_pow;
  });
  return out;
}

TrigExpr TrigExpr::scaled(const GaussianRational& s) const {
  TrigExpr out;
  if (s.is_zero()) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff *= s;
  return out;
}

TrigExpr operator+(const TrigExpr& a, const TrigExpr& b) {
  std::vector<TrigTerm> raw = a.terms_;
  raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
  return TrigExpr::from_terms(std::move(raw));
}

TrigExpr operator-(const TrigExpr& a, const TrigExpr& b) { return a + b.scaled(GaussianRational(-1)); }

TrigExpr operator*(const TrigExpr& a, const TrigExpr& b) {
  std::vector<TrigTerm> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_)
      raw.push_back(TrigTerm{ta.coeff * tb.coeff, ta.sin_pow + tb.sin_pow,
                             ta.cos_pow + tb.cos_pow, ta.phi_freq + tb.phi_freq});
  return TrigExpr::from_terms(std::move(raw));
}

TrigExpr TrigExpr::d_dtheta() const {
  std::vector<TrigTerm> raw;
  raw.reserve(2 * terms_.size());
  for (const auto& t : terms_) {
    if (!t.sin_pow.is_zero()) {
      raw.push_back(TrigTerm{t.coeff * GaussianRational(t.sin_pow.to_rational()),
                             t.sin_pow - HalfInteger::whole(1), t.cos_pow + 1, t.phi_freq});
    }
    if (t.cos_pow > 0) {
      raw.push_back(TrigTerm{t.coeff * GaussianRational(Rational(-t.cos_pow)),
                             t.sin_pow + HalfInteger::whole(1), t.cos_pow - 1, t.phi_freq});
    }
  }
  return from_terms(std::move(raw));
}

TrigExpr TrigExpr::conj() const {
  std::vector<TrigTerm> raw = terms_;
  for (auto& t : raw) {
    t.coeff = t.coeff.conj();
    t.phi_freq = -t.phi_freq;
  }
  return from_terms(std::move(raw));
}

TrigExpr TrigExpr::d_dphi() const {
  std::vector<TrigTerm> raw = terms_;
  for (auto& t : raw) t.coeff *= GaussianRational(Rational(0), t.phi_freq.to_rational());
  return from_terms(std::move(raw));
}

std::complex<double> TrigExpr::eval(double theta, double phi) const {
  if (!(theta > 0.0 && theta < kPi)) throw std::domain_error("TrigExpr::eval: theta outside (0, pi)");
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  // Terms sharing a phi frequency are contiguous in canonical order. Summing
  // each run before multiplying by its phase keeps the theta-only part of the
  // evaluation identical across phi, so phase relations between evaluations
  // at shifted phi survive at full precision even when the polynomial part
  // cancels heavily.
  std::complex<double> acc{0.0, 0.0};
  std::size_t i = 0;
  while (i < terms_.size()) {
    const HalfInteger mu = terms_[i].phi_freq;
    std::complex<double> inner{0.0, 0.0};
    for (; i < terms_.size() && terms_[i].phi_freq == mu; ++i) {
      const TrigTerm& t = terms_[i];
      inner += t.coeff.to_complex() * (std::pow(s, t.sin_pow.to_double()) * ipow(c, t.cos_pow));
    }
    const double mu_phi = mu.to_double() * phi;
    acc += inner * std::complex<double>(std::cos(mu_phi), std::sin(mu_phi));
  }
  return acc;
}

std::string TrigExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const TrigTerm& t = terms_[i];
    if (i > 0) out += " + ";
    out += "(" + t.coeff.str() + ")";
    if (!t.sin_pow.is_zero()) {
      out += "*sin(th)";
      if (t.sin_pow != HalfInteger::whole(1)) out += "^(" + t.sin_pow.str() + ")";
    }
    if (t.cos_pow != 0) {
      out += "*cos(th)";
      if (t.cos_pow != 1) out += "^" + std::to_string(t.cos_pow);
    }
    if (!t.phi_freq.is_zero()) out += "*exp(i*(" + t.phi_freq.str() + ")*phi)";
  }
  return out;
}

}  // namespace spinharm
