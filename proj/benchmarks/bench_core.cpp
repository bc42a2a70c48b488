#include <benchmark/benchmark.h>

#include "ga3/ga3.hpp"
#include "ga3/random.hpp"

namespace {

using namespace ga3;

void BM_GeometricProduct(benchmark::State& state) {
  Sampler rng(1);
  const Multivector a = rng.multivector();
  Multivector b = rng.multivector();
  for (auto _ : state) {
    b = a * b;
    b *= 0.5;
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_GeometricProduct);

void BM_Exp(benchmark::State& state) {
  Sampler rng(2);
  const Multivector a = rng.multivector();
  for (auto _ : state) benchmark::DoNotOptimize(exp(a));
}
BENCHMARK(BM_Exp);

void BM_Inverse(benchmark::State& state) {
  const Multivector a = embed(Vector3{0.3, -1.2, 0.8}) + basis::e12 * 0.4 + 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(inverse(a));
}
BENCHMARK(BM_Inverse);

void BM_MatrixRoundTrip(benchmark::State& state) {
  Sampler rng(3);
  const Multivector a = rng.multivector();
  for (auto _ : state) benchmark::DoNotOptimize(from_matrix(to_matrix(a)));
}
BENCHMARK(BM_MatrixRoundTrip);

void BM_CanonicalForm(benchmark::State& state) {
  Sampler rng(4);
  const KetSpinor k = rng.normalized_ket();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(k));
}
BENCHMARK(BM_CanonicalForm);

void BM_CartanRoundTrip(benchmark::State& state) {
  Sampler rng(5);
  const KetSpinor k = rng.ket();
  for (auto _ : state) benchmark::DoNotOptimize(cartan_inverse(cartan_null(k)));
}
BENCHMARK(BM_CartanRoundTrip);

void BM_Evolve(benchmark::State& state) {
  const Observable h{0.2, Vector3{0.8, -0.6, 0.0}};
  EvolutionConfig cfg;
  cfg.t_grid = uniform_grid(10.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evolve(h, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Evolve)->Arg(100)->Arg(10000);

void BM_ParseEvaluate(benchmark::State& state) {
  for (auto _ : state) {
    const auto tree = expr::parse("exp(pi/2 * e12) * (u+ - 0.5*e1) / (2 + e3)");
    benchmark::DoNotOptimize(expr::evaluate(*tree));
  }
}
BENCHMARK(BM_ParseEvaluate);

}  // namespace

BENCHMARK_MAIN();
