#include <benchmark/benchmark.h>

#include "minrep/branching.hpp"
#include "minrep/jacobi.hpp"
#include "minrep/param_sets.hpp"
#include "minrep/verify.hpp"

using namespace minrep;

static void BM_Gauss2F1_Series(benchmark::State& state) {
  specfun::HypergeometricParams p{0.75, 2.25, 1.5};
  for (auto _ : state) benchmark::DoNotOptimize(specfun::gauss_2f1(p, 0.4));
}
BENCHMARK(BM_Gauss2F1_Series);

static void BM_Gauss2F1_Pfaff(benchmark::State& state) {
  specfun::HypergeometricParams p{0.75, 2.25, 1.5};
  for (auto _ : state) benchmark::DoNotOptimize(specfun::gauss_2f1(p, -8.0));
}
BENCHMARK(BM_Gauss2F1_Pfaff);

static void BM_JacobiPhi_Terminating(benchmark::State& state) {
  specfun::JacobiFunctionSpec spec{1.0, 3.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(specfun::jacobi_phi(spec, 5.0));
}
BENCHMARK(BM_JacobiPhi_Terminating);

static void BM_VConstantExact(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        exact::v_constant_exact(exact::VKind::pm, HalfInt(3), HalfInt(1), HalfInt(1)));
}
BENCHMARK(BM_VConstantExact);

static void BM_VQuadrature(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(quadrature::verify_v_pm(HalfInt(3), HalfInt(1), HalfInt(1), 1e-8));
}
BENCHMARK(BM_VQuadrature);

static void BM_BranchNoncompact(benchmark::State& state) {
  SignatureSplit split = make_split({6, 6}, 3, 3, 3, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(branching::branch_noncompact_discrete(split, HalfInt(20)));
}
BENCHMARK(BM_BranchNoncompact);

BENCHMARK_MAIN();
