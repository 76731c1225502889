#include <benchmark/benchmark.h>

#include "gelfand/catalog.hpp"
#include "gelfand/random.hpp"
#include "gelfand/spherical.hpp"
#include "gelfand/suite.hpp"

using namespace gelfand;

namespace {

const PairContext& pair_fixture(const std::string& name) {
  static std::map<std::string, PairContext> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build_pair(name)).first;
  return it->second;
}

void BM_StructureConstants(benchmark::State& state, const std::string& name) {
  const PairContext& ctx = pair_fixture(name);
  for (auto _ : state) {
    StructureConstants sc(ctx.cosets);
    benchmark::DoNotOptimize(sc.count(0, 0, 0));
  }
}
BENCHMARK_CAPTURE(BM_StructureConstants, s5_s4, std::string("s5/s4"));
BENCHMARK_CAPTURE(BM_StructureConstants, z64, std::string("z64"));

void BM_SphericalBasis(benchmark::State& state, const std::string& name) {
  const PairContext& ctx = pair_fixture(name);
  for (auto _ : state) {
    auto basis = spherical_basis(ctx.cosets);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK_CAPTURE(BM_SphericalBasis, cube3, std::string("cube3"));
BENCHMARK_CAPTURE(BM_SphericalBasis, z64, std::string("z64"));

void BM_Convolve(benchmark::State& state, const std::string& name) {
  const PairContext& ctx = pair_fixture(name);
  const auto f = random_group_function(ctx.group, 1);
  const auto g = random_group_function(ctx.group, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve(f, g));
  }
}
BENCHMARK_CAPTURE(BM_Convolve, cube3, std::string("cube3"));
BENCHMARK_CAPTURE(BM_Convolve, s5_s4, std::string("s5/s4"));

void BM_SphericalTransform(benchmark::State& state, const std::string& name) {
  const PairContext& ctx = pair_fixture(name);
  static std::map<std::string, BasisPtr> bases;
  auto it = bases.find(name);
  if (it == bases.end()) it = bases.emplace(name, spherical_basis(ctx.cosets)).first;
  const auto f = random_bi_invariant_function(ctx.cosets, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spherical_transform(f, it->second));
  }
}
BENCHMARK_CAPTURE(BM_SphericalTransform, z64, std::string("z64"));

void BM_VerifyPlancherel(benchmark::State& state) {
  SuiteConfig cfg;
  cfg.pairs = {"z16"};
  cfg.suites = {"plancherel"};
  cfg.trials = 20;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_suite(cfg));
  }
}
BENCHMARK(BM_VerifyPlancherel);

}  // namespace

BENCHMARK_MAIN();
