#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinharm/double_valued.hpp"
#include "spinharm/fd_stencil.hpp"
#include "spinharm/harmonic.hpp"
#include "spinharm/operators.hpp"
#include "spinharm/oracle.hpp"
#include "spinharm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

using namespace spinharm;

namespace {

constexpr double kPi = 3.14159265358979323846;

QuantumNumbers qn(long long l2, long long m2) {
  return {HalfInteger::from_twice(l2), HalfInteger::from_twice(m2)};
}

double rel_err(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-10);
}

}  // namespace

TEST_CASE("stencil reproduces exact operator values pointwise") {
  Harmonic y11 = make_harmonic(qn(1, 1));
  std::complex<double> fd = fd_apply(OperatorKind::Mz, y11.expr, kPi / 3, 1.0, 1e-4);
  std::complex<double> exact = 0.5 * y11.expr.eval(kPi / 3, 1.0);
  CHECK(rel_err(fd, exact) < 1e-8);

  Harmonic y51 = make_harmonic(qn(5, 1));
  fd = fd_apply(OperatorKind::M2, y51.expr, 1.2, 0.3, 1e-4);
  exact = 8.75 * y51.expr.eval(1.2, 0.3);
  CHECK(rel_err(fd, exact) < 1e-6);
}

TEST_CASE("difference-grouped stencils vanish exactly on flat directions") {
  TrigExpr one = TrigExpr::term(1, HalfInteger::whole(0), 0, HalfInteger::whole(0));
  CHECK(std::abs(fd_apply(OperatorKind::Mz, one, 1.1, 0.7, 1e-4)) == 0.0);
  // cos(theta) has no phi dependence either.
  TrigExpr c = TrigExpr::term(1, HalfInteger::whole(0), 1, HalfInteger::whole(0));
  CHECK(std::abs(fd_apply(OperatorKind::Mz, c, 1.1, 0.7, 1e-4)) == 0.0);
}

TEST_CASE("stencil rejects poles and out-of-range steps") {
  TrigExpr e = make_harmonic(qn(1, 1)).expr;
  CHECK_THROWS_AS(fd_apply(OperatorKind::Mz, e, 1e-5, 0.0, 1e-4), std::invalid_argument);
  CHECK_THROWS_AS(fd_apply(OperatorKind::Mz, e, kPi - 1e-5, 0.0, 1e-4), std::invalid_argument);
  CHECK_THROWS_AS(fd_apply(OperatorKind::Mz, e, 1.0, 0.0, 1e-7), std::invalid_argument);
  CHECK_THROWS_AS(fd_apply(OperatorKind::Mz, e, 1.0, 0.0, 0.5), std::invalid_argument);
}

TEST_CASE("grid validation") {
  GridSpec g;
  CHECK_NOTHROW(g.require_valid());
  CHECK(g.theta_points().size() == 6);

  GridSpec bad = g;
  bad.theta_min = 0.01;
  CHECK_THROWS_AS(bad.require_valid(), std::invalid_argument);
  bad = g;
  bad.h = 1e-7;
  CHECK_THROWS_AS(bad.require_valid(), std::invalid_argument);
  bad = g;
  bad.phi_points.clear();
  CHECK_THROWS_AS(bad.require_valid(), std::invalid_argument);
  bad = g;
  bad.n_theta = 0;
  CHECK_THROWS_AS(bad.require_valid(), std::invalid_argument);
}

TEST_CASE("oracle comparison over the default grid") {
  GridSpec grid;

  OracleReport r = oracle_compare(OperatorKind::M2, make_harmonic(qn(3, 3)).expr, grid);
  CHECK(r.max_rel_error < 1e-6);
  CHECK(r.samples == 18);
  CHECK(!r.symbolic_zero);

  // The step that picks up the cot((l+1/2)theta) factor.
  r = oracle_compare(OperatorKind::MplusPrime, make_harmonic(qn(3, -1)).expr, grid);
  CHECK(r.max_rel_error < 1e-6);

  // Mz needs only phi samples, where the phase grouping leaves no
  // theta-polynomial roundoff to amplify.
  for (long long l2 : {1, 5, 9}) {
    r = oracle_compare(OperatorKind::Mz, make_harmonic(qn(l2, 1)).expr, grid);
    CHECK(r.max_rel_error < 1e-9);
  }

  // Annihilated top state: relative error is meaningless, absolute is tiny.
  r = oracle_compare(OperatorKind::MplusPrime, make_harmonic(qn(5, 5)).expr, grid);
  CHECK(r.symbolic_zero);
  CHECK(r.max_abs_error < 1e-8);
}

TEST_CASE("stencil error falls at fourth order in h") {
  // Truncation-dominated state: large phase frequency makes the phi stencil
  // error visible well above roundoff.
  TrigExpr y = make_harmonic(qn(25, 25)).expr;
  TrigExpr exact = apply(OperatorKind::Mz, y);
  GridSpec grid;

  auto max_abs_err = [&](double h) {
    double worst = 0.0;
    for (double theta : grid.theta_points())
      for (double phi : grid.phi_points)
        worst = std::max(worst, std::abs(fd_apply(OperatorKind::Mz, y, theta, phi, h) -
                                         exact.eval(theta, phi)));
    return worst;
  };

  double e1 = max_abs_err(1e-3);
  double e2 = max_abs_err(5e-4);
  double e3 = max_abs_err(2.5e-4);
  CHECK(e2 <= e1 / 8.0);
  CHECK(e3 <= e2 / 8.0);
}

TEST_CASE("quadrature rules hit their exactness classes") {
  auto gl = gauss_legendre_nodes(16);
  REQUIRE(gl.size() == 16);
  double sum_w = 0.0, sum_x2 = 0.0;
  for (const auto& node : gl) {
    sum_w += node.w;
    sum_x2 += node.w * node.x * node.x;
  }
  CHECK(sum_w == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sum_x2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

  auto gc = gauss_chebyshev2_nodes(16);
  REQUIRE(gc.size() == 16);
  sum_w = 0.0;
  for (const auto& node : gc) sum_w += node.w;
  CHECK(sum_w == doctest::Approx(kPi / 2).epsilon(1e-14));

  CHECK_THROWS_AS(gauss_legendre_nodes(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_chebyshev2_nodes(0), std::invalid_argument);
}

TEST_CASE("quadrature norms match the closed forms") {
  CHECK(quadrature_norm(qn(1, 1), 16) ==
        doctest::Approx(2 * kPi * kPi).epsilon(1e-12));
  CHECK(quadrature_norm(qn(2, 0), 16) == doctest::Approx(4 * kPi / 3).epsilon(1e-12));
  CHECK(quadrature_norm(qn(3, 3), 32) ==
        doctest::Approx(1.5 * kPi * kPi).epsilon(1e-12));

  // Node count below the degree bound is refused, the bound itself works.
  CHECK_THROWS_AS(quadrature_norm(qn(1, 1), 2), std::invalid_argument);
  CHECK_NOTHROW(quadrature_norm(qn(1, 1), 3));
}

TEST_CASE("quadrature plateaus once the rule is exact") {
  QuantumNumbers q = qn(25, 3);  // order 11, bound 15
  double at_bound = quadrature_norm(q, 15);
  double refined = quadrature_norm(q, 40);
  CHECK(std::abs(refined - at_bound) <= 1e-13 * std::abs(at_bound));
}

TEST_CASE("quadrature agrees with the exact integrals across both sectors") {
  for (const auto& q : states_up_to(HalfInteger::from_twice(9))) {
    double exact = norm_squared_integral(q).to_double();
    long long bound =
        q.order() + (q.m.abs().twice().convert_to<long long>() + 1) / 2 + 2;
    double quad = quadrature_norm(q, static_cast<int>(bound));
    CHECK(std::abs(quad - exact) <= 1e-12 * exact);
  }
}

TEST_CASE("phase continuation ratios distinguish the sectors") {
  DoubleValuedReport r = double_valued_check(qn(1, 1));
  CHECK(r.samples > 0);
  CHECK(r.pass(1e-12));

  CHECK(double_valued_check(qn(4, 2)).pass(1e-12));
  CHECK(double_valued_check(qn(5, -3)).pass(1e-12));

  // Direct spot check of the sign conventions underneath the report.
  TrigExpr y_half = make_harmonic(qn(1, 1)).expr;
  std::complex<double> base = y_half.eval(1.0, 0.7);
  CHECK(std::abs(y_half.eval(1.0, 0.7 + 2 * kPi) + base) <= 1e-12 * std::abs(base));
  CHECK(std::abs(y_half.eval(1.0, 0.7 + 4 * kPi) - base) <= 1e-12 * std::abs(base));

  TrigExpr y_int = make_harmonic(qn(2, 2)).expr;
  base = y_int.eval(1.0, 0.7);
  CHECK(std::abs(y_int.eval(1.0, 0.7 + 2 * kPi) - base) <= 1e-12 * std::abs(base));
}
