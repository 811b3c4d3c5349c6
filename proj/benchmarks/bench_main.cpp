#include <benchmark/benchmark.h>

#include "symfun/families.hpp"
#include "symfun/macops.hpp"
#include "symfun/verify.hpp"

using namespace symfun;

namespace {

IntPoly2 poly(const char* s) { return RatFun::parse(s).num(); }

void BM_RatFunGcd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  IntPoly2 common = poly("1-q*t");
  IntPoly2 a = poly("1+q-t^2");
  IntPoly2 b = poly("q-t+q^2*t");
  for (int i = 0; i < n; ++i) {
    a = a * poly("1-q^2*t");
    b = b * poly("1-t^3");
  }
  a = a * common;
  b = b * common;
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_RatFunGcd)->DenseRange(1, 4);

void BM_RatFunSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RatFun acc;
    for (int k = 1; k <= n; ++k) acc += RatFun(1L) / (RatFun(1L) - RatFun::qt(k, k - 1));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_RatFunSum)->DenseRange(2, 6, 2);

void BM_MacdonaldDegree(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Context<RatFun> ctx;
    benchmark::DoNotOptimize(macdonald_degree(ctx, d).size());
  }
}
BENCHMARK(BM_MacdonaldDegree)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_MacdonaldDegreeNumeric(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Context<Rat> ctx(mpq_class(3, 7), mpq_class(-5, 2));
    benchmark::DoNotOptimize(macdonald_degree(ctx, d).size());
  }
}
BENCHMARK(BM_MacdonaldDegreeNumeric)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_TransitionMatrix(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Context<RatFun> ctx;
    benchmark::DoNotOptimize(transition_matrix(ctx, Basis::HL_P, Basis::m, d));
  }
}
BENCHMARK(BM_TransitionMatrix)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_ApplyDN(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Context<RatFun>& ctx = symbolic();
  const auto f = restrict_to(ctx, macdonald_M(ctx, Partition({2, 1})), n);
  for (auto _ : state) benchmark::DoNotOptimize(apply_DN(ctx, f, n));
}
BENCHMARK(BM_ApplyDN)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_AkEigen(benchmark::State& state) {
  const Context<RatFun>& ctx = symbolic();
  const Partition la({3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(A_k_eigen(ctx, la));
}
BENCHMARK(BM_AkEigen)->Unit(benchmark::kMillisecond);

void BM_StepSeries(benchmark::State& state) {
  const Context<RatFun>& ctx = symbolic();
  const auto f = macdonald_M(ctx, Partition({2, 1}));
  const auto kind = state.range(0) == 0 ? StepKind::B : StepKind::C;
  for (auto _ : state) benchmark::DoNotOptimize(step_series_apply(ctx, kind, 2, f, 4));
}
BENCHMARK(BM_StepSeries)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_KernelPi(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_pi(symbolic(), d));
}
BENCHMARK(BM_KernelPi)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_Proposition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_proposition(n, Partition({2, 1})));
}
BENCHMARK(BM_Proposition)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
