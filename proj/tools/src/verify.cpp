#include "verify.hpp"

#include "spinharm/double_valued.hpp"
#include "spinharm/harmonic.hpp"
#include "spinharm/ladder.hpp"
#include "spinharm/operators.hpp"
#include "spinharm/oracle.hpp"
#include "spinharm/quadrature.hpp"
#include "spinharm/random_expr.hpp"

#include <cmath>
#include <variant>

namespace spinharm {
namespace {

std::string detail_path(const SuiteOptions& opts, const std::string& name) {
  return opts.out_dir + "/verify_" + name + ".json";
}

Json qn_json(const QuantumNumbers& qn) {
  return Json{{"l2", qn.l.twice().convert_to<long long>()},
              {"m2", qn.m.twice().convert_to<long long>()}};
}

}  // namespace

SectionResult run_eigen_suite(const SuiteOptions& opts) {
  SectionResult section{"eigen"};
  Json failed = Json::array();
  long long states = 0;
  for (const auto& qn : states_up_to(opts.l_max)) {
    ++states;
    Harmonic h = make_harmonic(qn);

    EigenCheckResult mz = eigen_check(h.expr, OperatorKind::Mz);
    ++section.checks;
    if (!mz.eigenvalue || *mz.eigenvalue != GaussianRational(qn.m.to_rational())) {
      ++section.failures;
      Json f = qn_json(qn);
      f["op"] = "Mz";
      f["got"] = mz.eigenvalue ? mz.eigenvalue->str() : "none";
      f["expected"] = qn.m.str();
      failed.push_back(std::move(f));
    }

    EigenCheckResult m2 = eigen_check(h.expr, OperatorKind::M2);
    ++section.checks;
    if (!m2.eigenvalue || *m2.eigenvalue != GaussianRational(l_times_l_plus_one(qn.l))) {
      ++section.failures;
      Json f = qn_json(qn);
      f["op"] = "M2";
      f["got"] = m2.eigenvalue ? m2.eigenvalue->str() : "none";
      f["expected"] = to_string(l_times_l_plus_one(qn.l));
      failed.push_back(std::move(f));
    }
  }

  section.details_path = detail_path(opts, section.name);
  Json detail;
  detail["suite"] = "eigen";
  detail["lMax"] = opts.l_max.str();
  detail["states"] = states;
  detail["checks"] = section.checks;
  detail["failures"] = section.failures;
  detail["failed"] = std::move(failed);
  write_json_file(section.details_path, detail);
  return section;
}

namespace {

// What the classification must be, derived from the quantum numbers alone:
// steps away from zero at |m| = l annihilate; half-odd sign-flip steps
// m = ±1/2 -> ∓1/2 are anomalous with k = scale = l + 1/2; everything else
// lands exactly on a neighboring harmonic.
bool ladder_row_ok(const QuantumNumbers& qn, LadderDirection dir, const LadderResult& r) {
  const HalfInteger one = HalfInteger::whole(1);
  HalfInteger m_to = dir == LadderDirection::Up ? qn.m + one : qn.m - one;

  if (m_to.abs() > qn.l) return std::holds_alternative<Annihilated>(r.outcome);

  if (qn.l.is_half_odd() && qn.m.abs() == HalfInteger::from_twice(1) &&
      m_to.abs() == HalfInteger::from_twice(1) && !(qn.m == m_to)) {
    const auto* a = std::get_if<Anomalous>(&r.outcome);
    if (a == nullptr) return false;
    Rational expected = (qn.l + HalfInteger::from_twice(1)).to_rational();
    return Rational(a->k) == expected && a->scale == expected;
  }

  const auto* p = std::get_if<Proportional>(&r.outcome);
  if (p == nullptr) return false;
  // Toward-zero step off the edge |m| = l multiplies by exactly 2l.
  if (qn.m.abs() == qn.l && !qn.l.is_zero() && m_to.abs() < qn.m.abs()) {
    Rational twol = qn.l.to_rational() * 2;
    return p->constant == GaussianRational(twol);
  }
  return true;
}

}  // namespace

SectionResult run_ladder_suite(const SuiteOptions& opts) {
  SectionResult section{"ladder"};
  Json rows = Json::array();
  Json failed = Json::array();
  for (const auto& qn : states_up_to(opts.l_max)) {
    for (LadderDirection dir : {LadderDirection::Up, LadderDirection::Down}) {
      LadderResult r = ladder_classify(qn, dir);
      ++section.checks;
      Json row = classification_to_json(r);
      bool ok = ladder_row_ok(qn, dir, r);
      if (!ok) {
        ++section.failures;
        failed.push_back(row);
      }
      rows.push_back(std::move(row));
    }
  }

  section.details_path = detail_path(opts, section.name);
  Json detail;
  detail["suite"] = "ladder";
  detail["lMax"] = opts.l_max.str();
  detail["checks"] = section.checks;
  detail["failures"] = section.failures;
  detail["failed"] = std::move(failed);
  detail["rows"] = std::move(rows);
  write_json_file(section.details_path, detail);
  return section;
}

SectionResult run_commutators_suite(const SuiteOptions& opts) {
  SectionResult section{"commutators"};
  Json failed = Json::array();
  long long states = 0;
  for (const auto& qn : states_up_to(opts.l_max)) {
    ++states;
    Harmonic h = make_harmonic(qn);
    ++section.checks;
    if (!commutator_check(h.expr).all_zero()) {
      ++section.failures;
      Json f = qn_json(qn);
      f["input"] = "harmonic";
      failed.push_back(std::move(f));
    }
  }

  constexpr std::size_t kRandomMembers = 100;
  std::vector<TrigExpr> members = random_family(opts.seed, kRandomMembers);
  for (std::size_t i = 0; i < members.size(); ++i) {
    ++section.checks;
    if (!commutator_check(members[i]).all_zero()) {
      ++section.failures;
      failed.push_back(Json{{"input", "random"}, {"index", i}});
    }
  }

  section.details_path = detail_path(opts, section.name);
  Json detail;
  detail["suite"] = "commutators";
  detail["lMax"] = opts.l_max.str();
  detail["states"] = states;
  detail["randomMembers"] = static_cast<long long>(kRandomMembers);
  detail["seed"] = opts.seed;
  detail["checks"] = section.checks;
  detail["failures"] = section.failures;
  detail["failed"] = std::move(failed);
  write_json_file(section.details_path, detail);
  return section;
}

SectionResult run_oracle_suite(const SuiteOptions& opts) {
  SectionResult section{"oracle"};
  GridSpec grid;
  grid.h = opts.h;

  // Finite-difference rows: relative agreement for nonzero results, absolute
  // stencil noise for identically-zero ones.
  constexpr double kRelTol = 1e-6;
  constexpr double kZeroAbsTol = 1e-8;
  Json rows = Json::array();
  for (const auto& qn : states_up_to(opts.l_max)) {
    Harmonic h = make_harmonic(qn);
    for (OperatorKind op : kAllOperators) {
      OracleReport r = oracle_compare(op, h.expr, grid);
      ++section.checks;
      bool ok = r.symbolic_zero ? r.max_abs_error <= kZeroAbsTol : r.max_rel_error < kRelTol;
      if (!ok) ++section.failures;
      Json row = oracle_to_json(qn, r);
      row["pass"] = ok;
      rows.push_back(std::move(row));
    }
  }

  // Quadrature rows: the rule is exact for the integrand, so the numeric
  // norm must match the closed form at full double precision.
  constexpr double kQuadTol = 1e-12;
  Json quad = Json::array();
  for (const auto& qn : states_up_to(opts.l_max)) {
    long long bound = qn.order() + (qn.m.abs().twice().convert_to<long long>() + 1) / 2 + 2;
    int nodes = static_cast<int>(std::max(opts.nodes, bound));
    double numeric = quadrature_norm(qn, nodes);
    double exact = norm_squared_integral(qn).to_double();
    double rel = std::abs(numeric - exact) / exact;
    ++section.checks;
    bool ok = rel <= kQuadTol;
    if (!ok) ++section.failures;
    Json row = qn_json(qn);
    row["nodes"] = nodes;
    row["exact"] = exact;
    row["numeric"] = numeric;
    row["relError"] = rel;
    row["pass"] = ok;
    quad.push_back(std::move(row));
  }

  section.details_path = detail_path(opts, section.name);
  Json detail;
  detail["suite"] = "oracle";
  detail["lMax"] = opts.l_max.str();
  detail["h"] = opts.h;
  detail["checks"] = section.checks;
  detail["failures"] = section.failures;
  detail["rows"] = std::move(rows);
  detail["quadrature"] = std::move(quad);
  write_json_file(section.details_path, detail);
  return section;
}

SectionResult run_doublevalue_suite(const SuiteOptions& opts) {
  SectionResult section{"doublevalue"};
  constexpr double kTol = 1e-12;
  Json rows = Json::array();
  for (const auto& qn : states_up_to(opts.l_max)) {
    DoubleValuedReport r = double_valued_check(qn);
    ++section.checks;
    bool ok = r.pass(kTol);
    if (!ok) ++section.failures;
    Json row = double_valued_to_json(r);
    row["pass"] = ok;
    rows.push_back(std::move(row));
  }

  section.details_path = detail_path(opts, section.name);
  Json detail;
  detail["suite"] = "doublevalue";
  detail["lMax"] = opts.l_max.str();
  detail["checks"] = section.checks;
  detail["failures"] = section.failures;
  detail["rows"] = std::move(rows);
  write_json_file(section.details_path, detail);
  return section;
}

Json summary_to_json(const std::vector<SectionResult>& sections) {
  long long checks = 0, failures = 0;
  Json secs = Json::array();
  for (const SectionResult& s : sections) {
    checks += s.checks;
    failures += s.failures;
    secs.push_back(Json{{"name", s.name}, {"pass", s.failures == 0}, {"details", s.details_path}});
  }
  return Json{{"totalChecks", checks}, {"failures", failures}, {"sections", std::move(secs)}};
}

}  // namespace spinharm
