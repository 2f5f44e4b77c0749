// Microbenchmarks for the hot paths: construction, canonicalization,
// operator application, ladder classification, and quadrature.

#include "spinharm/harmonic.hpp"
#include "spinharm/ladder.hpp"
#include "spinharm/operators.hpp"
#include "spinharm/quadrature.hpp"
#include "spinharm/random_expr.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace spinharm;

namespace {

QuantumNumbers qn_from_state(long long l2) {
  return {HalfInteger::from_twice(l2), HalfInteger::from_twice(1)};
}

void BM_MakeHarmonic(benchmark::State& state) {
  QuantumNumbers qn = qn_from_state(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(make_harmonic(qn));
}
BENCHMARK(BM_MakeHarmonic)->Arg(5)->Arg(13)->Arg(25);

void BM_ApplyM2(benchmark::State& state) {
  TrigExpr y = make_harmonic(qn_from_state(state.range(0))).expr;
  for (auto _ : state) benchmark::DoNotOptimize(apply(OperatorKind::M2, y));
}
BENCHMARK(BM_ApplyM2)->Arg(5)->Arg(13)->Arg(25);

void BM_LadderClassify(benchmark::State& state) {
  QuantumNumbers qn = qn_from_state(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(ladder_classify(qn, LadderDirection::Down));
}
BENCHMARK(BM_LadderClassify)->Arg(5)->Arg(13)->Arg(25);

void BM_Canonicalize(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<TrigExpr> pool;
  for (int i = 0; i < 16; ++i) pool.push_back(random_family_member(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    const TrigExpr& a = pool[i % pool.size()];
    const TrigExpr& b = pool[(i + 1) % pool.size()];
    benchmark::DoNotOptimize(a * b);
    ++i;
  }
}
BENCHMARK(BM_Canonicalize);

void BM_Eval(benchmark::State& state) {
  TrigExpr y = make_harmonic(qn_from_state(25)).expr;
  double phi = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(y.eval(1.1, phi));
    phi += 1e-3;
  }
}
BENCHMARK(BM_Eval);

void BM_QuadratureNorm(benchmark::State& state) {
  QuantumNumbers qn = qn_from_state(state.range(0));
  long long bound = qn.order() + 1 + 2;
  for (auto _ : state)
    benchmark::DoNotOptimize(quadrature_norm(qn, static_cast<int>(bound)));
}
BENCHMARK(BM_QuadratureNorm)->Arg(5)->Arg(25);

}  // namespace

BENCHMARK_MAIN();
