#include "json_io.hpp"

#include <fstream>
#include <stdexcept>
#include <variant>

namespace spinharm {

Json expr_to_json(const TrigExpr& e) {
  Json arr = Json::array();
  for (const TrigTerm& t : e.terms()) {
    Json term;
    term["coeff"] = Json{{"re", to_string(t.coeff.re())}, {"im", to_string(t.coeff.im())}};
    term["sin2"] = t.sin_pow.twice().convert_to<long long>();
    term["cos"] = t.cos_pow;
    term["phi2"] = t.phi_freq.twice().convert_to<long long>();
    arr.push_back(std::move(term));
  }
  return arr;
}

static Json exact_value_to_json(const ExactValue& v) {
  return Json{{"rat", to_string(v.rat)}, {"pi", to_string(v.pi)}, {"pi2", to_string(v.pi2)}};
}

Json harmonic_to_json(const Harmonic& h) {
  Json j;
  j["l2"] = h.qn.l.twice().convert_to<long long>();
  j["m2"] = h.qn.m.twice().convert_to<long long>();
  Json poly = Json::array();
  for (const Rational& c : h.poly.coeffs) poly.push_back(to_string(c));
  j["poly"] = std::move(poly);
  j["exprJSON"] = expr_to_json(h.expr);
  j["normSq"] = exact_value_to_json(norm_squared_integral(h.qn));
  j["normConst"] = normalization_constant(h.qn);
  j["phiPeriodPi"] = phi_period_in_pi(h.qn);
  return j;
}

Json classification_to_json(const LadderResult& r) {
  Json j;
  j["l2"] = r.from.l.twice().convert_to<long long>();
  j["m2"] = r.from.m.twice().convert_to<long long>();
  j["dir"] = direction_name(r.dir);
  if (std::holds_alternative<Annihilated>(r.outcome)) {
    j["outcome"] = "annihilated";
    j["residualNonzero"] = false;
  } else if (const auto* p = std::get_if<Proportional>(&r.outcome)) {
    j["outcome"] = "proportional";
    j["constant"] = p->constant.str();
    j["residualNonzero"] = false;
  } else if (const auto* a = std::get_if<Anomalous>(&r.outcome)) {
    j["outcome"] = "anomalous";
    j["k"] = a->k;
    j["scale"] = to_string(a->scale);
    j["residualNonzero"] = false;
  } else {
    j["outcome"] = "other";
    j["residualNonzero"] = true;
  }
  return j;
}

Json oracle_to_json(const QuantumNumbers& qn, const OracleReport& r) {
  Json j;
  j["op"] = operator_name(r.op);
  j["l2"] = qn.l.twice().convert_to<long long>();
  j["m2"] = qn.m.twice().convert_to<long long>();
  j["maxRelError"] = r.max_rel_error;
  j["worstTheta"] = r.worst_theta;
  j["worstPhi"] = r.worst_phi;
  j["samples"] = r.samples;
  j["h"] = r.h;
  j["symbolicZero"] = r.symbolic_zero;
  j["maxAbsError"] = r.max_abs_error;
  return j;
}

Json double_valued_to_json(const DoubleValuedReport& r) {
  Json j;
  j["l2"] = r.qn.l.twice().convert_to<long long>();
  j["m2"] = r.qn.m.twice().convert_to<long long>();
  j["ratioError2pi"] = r.max_ratio_error_2pi;
  j["ratioError4pi"] = r.max_ratio_error_4pi;
  j["abs2Spread"] = r.max_abs2_spread;
  j["samples"] = r.samples;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace spinharm
