#include <benchmark/benchmark.h>

#include <random>

#include "actcode/descriptor.hpp"
#include "actcode/eval.hpp"
#include "actcode/similarity.hpp"
#include "actcode/synthetic.hpp"

namespace {

using namespace actcode;

ActionMatrix random_action(std::size_t joints, std::size_t frames, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 10.0);
  Eigen::MatrixXd x(static_cast<Eigen::Index>(frames), static_cast<Eigen::Index>(joints));
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double scale = 1.0 + static_cast<double>(j);
    for (Eigen::Index t = 0; t < x.rows(); ++t) x(t, j) = scale * n(rng);
  }
  return ActionMatrix(std::move(x), 120.0);
}

// Descriptor cost against sequence length at J = 40, jm = 20.
void BM_DescriptorFrames(benchmark::State& state) {
  const auto a = random_action(40, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(compute_descriptor(a, 20));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DescriptorFrames)->RangeMultiplier(2)->Range(250, 16000)->Complexity(benchmark::oN);

void BM_DescriptorJm(benchmark::State& state) {
  const auto a = random_action(40, 2000, 2);
  const auto jm = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_descriptor(a, jm));
}
BENCHMARK(BM_DescriptorJm)->DenseRange(5, 40, 5);

void BM_ButterworthFilter(benchmark::State& state) {
  const auto a = random_action(40, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(butterworth_filter(a, FilterSpec{}));
}
BENCHMARK(BM_ButterworthFilter)->Arg(1000)->Arg(4000);

void BM_Csm(benchmark::State& state) {
  const auto jm = static_cast<std::size_t>(state.range(0));
  const auto a = compute_descriptor(random_action(40, 500, 4), jm);
  const auto b = compute_descriptor(random_action(40, 500, 5), jm);
  for (auto _ : state) benchmark::DoNotOptimize(csm(a, b));
}
BENCHMARK(BM_Csm)->Arg(5)->Arg(10)->Arg(20)->Arg(30);

void BM_SimilarityMatrix(benchmark::State& state) {
  SyntheticConfig cfg;
  cfg.per_class = 5;
  const auto data = generate_synthetic(cfg).actions;
  PipelineConfig pipeline;
  pipeline.jm = 10;
  const auto desc = describe_all(data, pipeline);
  const auto threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(similarity_matrix(desc, desc, MetricSpec{}, threads));
}
BENCHMARK(BM_SimilarityMatrix)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
