#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "bayesmosaic/bayes.hpp"
#include "bayesmosaic/mosaic.hpp"
#include "bayesmosaic/svg.hpp"
#include "bayesmosaic/tree.hpp"

namespace {

using namespace bayesmosaic;

std::vector<double> simplex(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> w(0.01, 1.0);
  std::vector<double> v(n);
  double total = 0.0;
  for (auto& x : v) total += (x = w(rng));
  for (auto& x : v) x /= total;
  return v;
}

BayesModel square_model(std::size_t n) {
  std::mt19937_64 rng(n);
  const auto prior = simplex(rng, n);
  std::vector<std::pair<std::string, double>> named;
  std::vector<std::string> outcomes;
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    named.emplace_back("A" + std::to_string(i + 1), prior[i]);
    outcomes.push_back("B" + std::to_string(i + 1));
    rows.push_back(simplex(rng, n));
  }
  return make_model(named, outcomes, std::move(rows));
}

void BM_Posterior(benchmark::State& state) {
  const auto model = square_model(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(posterior(model, OutcomeIndex{0}));
}
BENCHMARK(BM_Posterior)->RangeMultiplier(2)->Range(2, 64);

void BM_Layout(benchmark::State& state) {
  const auto model = square_model(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(layout(model));
}
BENCHMARK(BM_Layout)->RangeMultiplier(2)->Range(2, 64);

void BM_RenderRatio(benchmark::State& state) {
  const auto model = square_model(static_cast<std::size_t>(state.range(0)));
  const auto fig = ratio_figure(model, PriorIndex{0}, OutcomeIndex{0});
  for (auto _ : state) benchmark::DoNotOptimize(render_ratio(fig));
}
BENCHMARK(BM_RenderRatio)->RangeMultiplier(2)->Range(2, 32);

void BM_Tree(benchmark::State& state) {
  const auto model = square_model(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(render_tree(build_tree(model)));
}
BENCHMARK(BM_Tree)->RangeMultiplier(2)->Range(2, 16);

}  // namespace
BENCHMARK_MAIN();
