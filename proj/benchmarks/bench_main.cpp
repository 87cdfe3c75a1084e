#include <benchmark/benchmark.h>

#include "hyperspec/bounds.hpp"
#include "hyperspec/generators.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/tensor_ops.hpp"

namespace {

using namespace hyperspec;

void BM_Apply(benchmark::State& state) {
  const Hypergraph g = fixture("H1");
  const TensorOperator op(g, OperatorKind::Adjacency);
  std::vector<double> x(static_cast<std::size_t>(g.order()) + 1, 0.5);
  x[0] = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(op.apply(x));
  }
}
BENCHMARK(BM_Apply);

void BM_PowerIteration(benchmark::State& state) {
  const Hypergraph g = fixture("H1");
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectralRadius(g));
  }
}
BENCHMARK(BM_PowerIteration);

void BM_SignlessLaplacian(benchmark::State& state) {
  const Hypergraph g = fixture("H2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(signlessLaplacianRadius(g));
  }
}
BENCHMARK(BM_SignlessLaplacian);

void BM_FullReport(benchmark::State& state) {
  const Hypergraph g = fixture("H1");
  for (auto _ : state) {
    benchmark::DoNotOptimize(fullReport(g));
  }
}
BENCHMARK(BM_FullReport);

void BM_ParseCanonical(benchmark::State& state) {
  const std::string text(fixtureText("H1"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parseHypergraph(text));
  }
}
BENCHMARK(BM_ParseCanonical);

void BM_CompleteUniform(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(completeUniform(20, 4));
  }
}
BENCHMARK(BM_CompleteUniform);

}  // namespace

BENCHMARK_MAIN();
