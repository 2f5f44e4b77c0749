#include "spinharm/random_expr.hpp"

namespace spinharm {
namespace {

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long long>(rng() % span);
}

}  // namespace

TrigExpr random_family_member(std::mt19937_64& rng) {
  std::vector<TrigTerm> raw;
  long long n_terms = draw(rng, 1, 4);
  for (long long t = 0; t < n_terms; ++t) {
    Rational re(draw(rng, -3, 3), draw(rng, 1, 2));
    Rational im(draw(rng, -3, 3), draw(rng, 1, 2));
    raw.push_back(TrigTerm{GaussianRational(re, im),
                           HalfInteger::from_twice(BigInt(draw(rng, -4, 6))),
                           draw(rng, 0, 3),
                           HalfInteger::from_twice(BigInt(draw(rng, -5, 5)))});
  }
  return TrigExpr::from_terms(std::move(raw));
}

std::vector<TrigExpr> random_family(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<TrigExpr> out;
  out.reserve(count);
  while (out.size() < count) {
    TrigExpr e = random_family_member(rng);
    if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace spinharm
