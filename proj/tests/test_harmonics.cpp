#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinharm/harmonic.hpp"
#include "spinharm/legendre.hpp"
#include "spinharm/quadrature.hpp"
#include "spinharm/quantum_numbers.hpp"

#include <cmath>
#include <vector>

using namespace spinharm;

namespace {

QuantumNumbers qn(long long l2, long long m2) {
  return {HalfInteger::from_twice(l2), HalfInteger::from_twice(m2)};
}

// e^{i m phi} sin^{|m|} P(cos) assembled termwise, bypassing make_harmonic.
TrigExpr assemble(const QuantumNumbers& q, const LegendrePoly& p) {
  std::vector<TrigTerm> raw;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    if (p.coeffs[k] == 0) continue;
    raw.push_back(TrigTerm{GaussianRational(p.coeffs[k]), q.m.abs(),
                           static_cast<long long>(k), q.m});
  }
  return canonicalize(std::move(raw));
}

}  // namespace

TEST_CASE("quantum number validity") {
  CHECK(qn(1, 1).valid());
  CHECK(qn(1, -1).valid());
  CHECK(qn(0, 0).valid());
  CHECK(qn(25, -25).valid());
  CHECK(!qn(1, 3).valid());    // |m| > l
  CHECK(!qn(2, 1).valid());    // l - m not an integer
  CHECK(!qn(-1, -1).valid());  // negative l
  CHECK(qn(5, 1).order() == 2);
  CHECK_THROWS_AS(qn(2, 1).require_valid(), std::invalid_argument);

  CHECK(states_up_to(HalfInteger::from_twice(25)).size() == 351);
  CHECK(half_odd_states_up_to(HalfInteger::from_twice(25)).size() == 182);
  CHECK(integer_states_up_to(HalfInteger::from_twice(25)).size() == 169);
  CHECK(states_up_to(HalfInteger::whole(0)).size() == 1);
}

TEST_CASE("series recurrence terminates at the polynomial degree") {
  for (const auto& q : states_up_to(HalfInteger::from_twice(15))) {
    LegendrePoly p = legendre_poly(q.l, q.m.abs());
    long long n = q.order();
    REQUIRE(p.order == n);
    REQUIRE(static_cast<long long>(p.coeffs.size()) == n + 1);
    CHECK(p.coeffs[static_cast<std::size_t>(n)] != 0);
    // The next ratio annihilates the series exactly: a_{n+2} = ratio * a_n = 0.
    CHECK(series_ratio(q.l, q.m.abs(), n) == 0);
    // Seed convention: lowest nonzero coefficient is 1.
    CHECK(p.coeffs[static_cast<std::size_t>(n % 2)] == 1);
  }
}

TEST_CASE("generated polynomials have pure parity") {
  for (const auto& q : states_up_to(HalfInteger::from_twice(15))) {
    LegendrePoly p = legendre_poly(q.l, q.m.abs());
    for (std::size_t k = 0; k < p.coeffs.size(); ++k)
      if ((static_cast<long long>(k) - p.order) % 2 != 0) CHECK(p.coeffs[k] == 0);
  }
}

TEST_CASE("legendre_poly rejects invalid inputs") {
  CHECK_THROWS_AS(legendre_poly(HalfInteger::from_twice(2), HalfInteger::from_twice(1)),
                  std::invalid_argument);  // n not an integer
  CHECK_THROWS_AS(legendre_poly(HalfInteger::from_twice(1), HalfInteger::from_twice(3)),
                  std::invalid_argument);  // n negative
  CHECK_THROWS_AS(legendre_poly(HalfInteger::from_twice(1), HalfInteger::from_twice(-1)),
                  std::invalid_argument);  // negative |m|
}

TEST_CASE("explicit low-order polynomials") {
  CHECK(legendre_poly(HalfInteger::from_twice(1), HalfInteger::from_twice(1)).coeffs ==
        std::vector<Rational>{1});
  CHECK(legendre_poly(HalfInteger::from_twice(3), HalfInteger::from_twice(1)).coeffs ==
        std::vector<Rational>{0, 1});
  CHECK(legendre_poly(HalfInteger::from_twice(5), HalfInteger::from_twice(1)).coeffs ==
        std::vector<Rational>{1, 0, -4});
  CHECK(legendre_poly(HalfInteger::from_twice(7), HalfInteger::from_twice(1)).coeffs ==
        std::vector<Rational>{0, 1, 0, -2});
}

TEST_CASE("general polynomial shapes for orders 0 through 3") {
  // P is proportional to 1, cos, 1-(2|m|+3)cos^2, cos[3-(2|m|+5)cos^2]/3 as
  // the order runs 0..3, for integer and half-odd |m| alike.
  for (long long am2 = 0; am2 <= 10; ++am2) {
    HalfInteger am = HalfInteger::from_twice(am2);
    Rational mu = am.to_rational();

    CHECK(legendre_poly(am, am).coeffs == std::vector<Rational>{1});
    CHECK(legendre_poly(am + HalfInteger::whole(1), am).coeffs == std::vector<Rational>{0, 1});
    CHECK(legendre_poly(am + HalfInteger::whole(2), am).coeffs ==
          std::vector<Rational>{1, 0, -(2 * mu + 3)});
    CHECK(legendre_poly(am + HalfInteger::whole(3), am).coeffs ==
          std::vector<Rational>{0, 1, 0, -(2 * mu + 5) / 3});
  }
}

TEST_CASE("the twelve lowest fermion harmonics have the quoted forms") {
  auto Yt = [](long long l2, long long m2) { return make_harmonic(qn(l2, m2)).expr; };
  auto simple = [](GaussianRational c, long long sin2, long long cos_pow, long long m2) {
    return TrigExpr::term(std::move(c), HalfInteger::from_twice(sin2), cos_pow,
                          HalfInteger::from_twice(m2));
  };

  // l = 1/2: sqrt(sin) e^{±i phi/2}
  CHECK(Yt(1, 1) == simple(1, 1, 0, 1));
  CHECK(Yt(1, -1) == simple(1, 1, 0, -1));
  // l = 3/2, |m| = 3/2: sin^{3/2} e^{±3i phi/2}
  CHECK(Yt(3, 3) == simple(1, 3, 0, 3));
  CHECK(Yt(3, -3) == simple(1, 3, 0, -3));
  // l = 3/2, |m| = 1/2: cos sqrt(sin) e^{±i phi/2}
  CHECK(Yt(3, 1) == simple(1, 1, 1, 1));
  CHECK(Yt(3, -1) == simple(1, 1, 1, -1));
  // l = 5/2, |m| = 5/2: sin^{5/2} e^{±5i phi/2}
  CHECK(Yt(5, 5) == simple(1, 5, 0, 5));
  CHECK(Yt(5, -5) == simple(1, 5, 0, -5));
  // l = 5/2, |m| = 3/2: cos sin^{3/2} e^{±3i phi/2}
  CHECK(Yt(5, 3) == simple(1, 3, 1, 3));
  CHECK(Yt(5, -3) == simple(1, 3, 1, -3));
  // l = 5/2, |m| = 1/2: (1 - 4cos^2) sqrt(sin) e^{±i phi/2}
  TrigExpr y51 = simple(1, 1, 0, 1) + simple(-4, 1, 2, 1);
  TrigExpr y51m = simple(1, 1, 0, -1) + simple(-4, 1, 2, -1);
  CHECK(Yt(5, 1) == y51);
  CHECK(Yt(5, -1) == y51m);
}

TEST_CASE("integer harmonics embed the familiar textbook forms") {
  CHECK(make_harmonic(qn(2, 0)).expr ==
        TrigExpr::term(1, HalfInteger::whole(0), 1, HalfInteger::whole(0)));
  CHECK(make_harmonic(qn(0, 0)).expr ==
        TrigExpr::term(1, HalfInteger::whole(0), 0, HalfInteger::whole(0)));
  CHECK(make_harmonic(qn(2, 2)).expr ==
        TrigExpr::term(1, HalfInteger::whole(1), 0, HalfInteger::whole(1)));
}

TEST_CASE("harmonics keep one phi frequency and sine power |m|") {
  for (const auto& q : states_up_to(HalfInteger::from_twice(15))) {
    Harmonic h = make_harmonic(q);
    REQUIRE(!h.expr.is_zero());
    for (const TrigTerm& t : h.expr.terms()) {
      CHECK(t.phi_freq == q.m);
      CHECK(t.sin_pow == q.m.abs());
    }
    // Round trip: reassembling sin^{|m|} P from the stored polynomial gives
    // back the canonical expression exactly.
    CHECK(assemble(q, h.poly) == h.expr);
  }
}

TEST_CASE("make_harmonic rejects invalid quantum numbers") {
  CHECK_THROWS_AS(make_harmonic(qn(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(make_harmonic(qn(2, 1)), std::invalid_argument);
}

TEST_CASE("wallis integrals match the closed forms") {
  // W(a, 0) over [0, pi]: pi*(a-1)!!/a!! for even a, 2*(a-1)!!/a!! for odd a.
  CHECK(wallis_integral(0, 0) == ExactValue{Rational(0), Rational(1), Rational(0)});
  CHECK(wallis_integral(2, 0) == ExactValue{Rational(0), Rational(1, 2), Rational(0)});
  CHECK(wallis_integral(4, 0) == ExactValue{Rational(0), Rational(3, 8), Rational(0)});
  CHECK(wallis_integral(1, 0) == ExactValue{Rational(2), Rational(0), Rational(0)});
  CHECK(wallis_integral(3, 0) == ExactValue{Rational(4, 3), Rational(0), Rational(0)});
  CHECK(wallis_integral(1, 2) == ExactValue{Rational(2, 3), Rational(0), Rational(0)});
  CHECK(wallis_integral(2, 2) == ExactValue{Rational(0), Rational(1, 8), Rational(0)});
}

TEST_CASE("norm integrals reproduce the known values") {
  CHECK(norm_squared_integral(qn(1, 1)) == ExactValue{Rational(0), Rational(0), Rational(2)});
  CHECK(norm_squared_integral(qn(2, 0)) == ExactValue{Rational(0), Rational(4, 3), Rational(0)});
  CHECK(norm_squared_integral(qn(3, 3)) ==
        ExactValue{Rational(0), Rational(0), Rational(3, 2)});

  CHECK(normalization_constant(qn(1, 1)) == doctest::Approx(0.225079).epsilon(1e-5));
  CHECK(normalization_constant(qn(2, 0)) == doctest::Approx(0.488603).epsilon(1e-5));
  CHECK(normalization_constant(qn(3, 3)) == doctest::Approx(0.259899).epsilon(1e-5));
}

TEST_CASE("norm integrals are strictly positive") {
  for (const auto& q : states_up_to(HalfInteger::from_twice(25))) {
    ExactValue v = norm_squared_integral(q);
    CHECK(v.to_double() > 0.0);
    CHECK(normalization_constant(q) > 0.0);
    CHECK(std::isfinite(normalization_constant(q)));
  }
}

TEST_CASE("phi periods split by m parity") {
  CHECK(phi_period_in_pi(qn(1, 1)) == 4);
  CHECK(phi_period_in_pi(qn(25, -3)) == 4);
  CHECK(phi_period_in_pi(qn(2, 2)) == 2);
  CHECK(phi_period_in_pi(qn(0, 0)) == 2);
}

TEST_CASE("quadrature cross-checks the exact norms") {
  CHECK(quadrature_norm(qn(1, 1), 16) ==
        doctest::Approx(norm_squared_integral(qn(1, 1)).to_double()).epsilon(1e-12));
  CHECK(quadrature_norm(qn(2, 0), 16) ==
        doctest::Approx(norm_squared_integral(qn(2, 0)).to_double()).epsilon(1e-12));
  CHECK(quadrature_norm(qn(5, 1), 32) ==
        doctest::Approx(norm_squared_integral(qn(5, 1)).to_double()).epsilon(1e-12));
}
