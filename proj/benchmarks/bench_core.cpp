#include <benchmark/benchmark.h>

#include <random>

#include "polycone/aubin.hpp"
#include "polycone/lp.hpp"
#include "polycone/oracle.hpp"

using namespace polycone;

namespace {

RatVec rand_vec(std::mt19937_64& rng, std::size_t n) {
  RatVec v(n);
  for (auto& x : v) x = static_cast<long>(rng() % 7) - 3;
  return v;
}

// Cone through m random halfspaces in R^n.
HCone random_cone(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  HCone h(n);
  for (std::size_t i = 0; i < m; ++i) h.add_le(rand_vec(rng, n));
  return h;
}

std::shared_ptr<const ProblemInstance> example1() {
  return std::make_shared<const ProblemInstance>(
      3, std::vector<RowInput>{{{1, 0, 1}, 0}},
      std::vector<RowInput>{{{1, 1, 1}, 0}, {{0, -1, 0}, 0}});
}

}  // namespace

static void BM_DoubleDescription(benchmark::State& st) {
  const HCone h = random_cone(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(1)), 7);
  for (auto _ : st) benchmark::DoNotOptimize(hcone_to_vcone(h));
}
BENCHMARK(BM_DoubleDescription)->Args({3, 6})->Args({4, 8})->Args({5, 10})->Args({6, 12});

static void BM_LpMaximize(benchmark::State& st) {
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  std::mt19937_64 rng(11);
  LinearProgram lp(n);
  for (std::size_t i = 0; i < 2 * n; ++i) lp.add(rand_vec(rng, n), Sense::LE, Rat(static_cast<long>(rng() % 5)));
  for (std::size_t j = 0; j < n; ++j) {
    lp.add(unit(n, j), Sense::LE, Rat(5));
    lp.add(unit(n, j), Sense::GE, Rat(-5));
  }
  const RatVec c = rand_vec(rng, n);
  for (auto _ : st) benchmark::DoNotOptimize(lp.maximize(c));
}
BENCHMARK(BM_LpMaximize)->Arg(4)->Arg(8)->Arg(16);

static void BM_LimitingUnion(benchmark::State& st) {
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  std::mt19937_64 rng(3);
  std::vector<RowInput> theta, cset;
  for (std::size_t i = 0; i < n; ++i) (i % 2 ? cset : theta).push_back({rand_vec(rng, n), 0});
  auto inst = std::make_shared<const ProblemInstance>(n, theta, cset);
  const GraphPoint gp = validate_graph_point(inst, zeros(n), zeros(n));
  for (auto _ : st) benchmark::DoNotOptimize(limiting_normal_cone_graph(gp));
}
BENCHMARK(BM_LimitingUnion)->Arg(2)->Arg(3)->Arg(4);

static void BM_AubinExactExample1(benchmark::State& st) {
  const GraphPoint gp = validate_graph_point(example1(), zeros(3), zeros(3));
  for (auto _ : st) benchmark::DoNotOptimize(aubin_exact(gp));
}
BENCHMARK(BM_AubinExactExample1);

static void BM_ProjectUnion(benchmark::State& st) {
  const auto inst = example1();
  const GraphDecomposition gd = graph_decomposition(*inst);
  const auto polys = gd.polyhedra();
  const RatVec z{Rat(-1, 2), Rat(1, 4), Rat(3, 8), Rat(1), Rat(-1, 2), Rat(1, 8)};
  for (auto _ : st) benchmark::DoNotOptimize(project_union(z, polys));
}
BENCHMARK(BM_ProjectUnion);
BENCHMARK_MAIN();
