#include <benchmark/benchmark.h>

#include <vector>

#include "qsl3/qlaurent.hpp"
#include "qsl3/thick.hpp"
#include "qsl3/u3algebra.hpp"
#include "qsl3/u3category.hpp"
#include "qsl3/verify.hpp"

namespace {

void BM_QuantumBinomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsl3::qbinom(n, n / 2));
  }
}
BENCHMARK(BM_QuantumBinomial)->Arg(12)->Arg(24);

void BM_Canonicalize(benchmark::State& state) {
  const auto [word, factor] =
      qsl3::Monomial::fromLetters({{1, 2}, {2, 2}, {1, 1}, {2, 1}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsl3::canonicalize(word));
  }
}
BENCHMARK(BM_Canonicalize);

void BM_ShuffleImage(benchmark::State& state) {
  const auto [word, factor] = qsl3::Monomial::fromLetters({{1, 2}, {2, 2}, {1, 2}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsl3::shuffle::shuffleImage(word));
  }
}
BENCHMARK(BM_ShuffleImage);

void BM_NormalizeObject(benchmark::State& state) {
  qsl3::GradedObject object;
  object.add(qsl3::Monomial::fromLetters({{1, 2}, {2, 2}, {1, 2}}).first, 0);
  object.add(qsl3::Monomial::fromLetters({{1, 1}, {2, 3}, {1, 1}}).first, -2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsl3::normalizeObject(object));
  }
}
BENCHMARK(BM_NormalizeObject);

void BM_ProjectorBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsl3::idempotentE(1, n));
  }
}
BENCHMARK(BM_ProjectorBuild)->Arg(3)->Arg(4)->Arg(5);

void BM_ProjectorCompose(benchmark::State& state) {
  const qsl3::DiagramOperator e = qsl3::idempotentE(1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsl3::compose(e, e));
  }
}
BENCHMARK(BM_ProjectorCompose)->Arg(3)->Arg(4);

void BM_ThickReturnCrossing(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const qsl3::ThickEdge p{1, t};
  const qsl3::ThickEdge q{2, t};
  for (auto _ : state) {
    const auto there = qsl3::thickCrossingOp(p, q);
    benchmark::DoNotOptimize(qsl3::compose(qsl3::thickCrossingOp(q, p), there));
  }
}
BENCHMARK(BM_ThickReturnCrossing)->Arg(1)->Arg(2);

void BM_TripleIdempotents(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsl3::verifyIdempotents(1, 1, 1));
  }
}
BENCHMARK(BM_TripleIdempotents);

}  // namespace

BENCHMARK_MAIN();
