#include <benchmark/benchmark.h>

#include "kdfab/convex.hpp"
#include "kdfab/counterexamples.hpp"

using namespace kdfab;

namespace {

void BM_kd_round_trip(benchmark::State& state) {
  const Group g = make_group({static_cast<int>(state.range(0))});
  Operator c(g);
  for (int r = 0; r < g.order(); ++r) {
    for (int col = 0; col < g.order(); ++col) c.at(r, col) = {1.0 / (1 + r + col), 0.1 * r};
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(kd_lower_inverse(kd_lower(c)));
  }
}
BENCHMARK(BM_kd_round_trip)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_subgroup_enumeration(benchmark::State& state) {
  const Group g = make_group({2, 2, 2, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_subgroups(g));
  }
}
BENCHMARK(BM_subgroup_enumeration);

void BM_pure_state_enumeration(benchmark::State& state) {
  const Group g = make_group({static_cast<int>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(pure_positive_states(g));
  }
}
BENCHMARK(BM_pure_state_enumeration)->Arg(12)->Arg(16);

void BM_membership_infeasible(benchmark::State& state) {
  const Z6Reference ref = z6_constants();
  const Operator rho_alpha = kd_lower_inverse(to_complex(ref.qalpha));
  const auto states = pure_positive_states(ref.group);
  for (auto _ : state) {
    benchmark::DoNotOptimize(membership_conv_pure(rho_alpha, states));
  }
}
BENCHMARK(BM_membership_infeasible);

void BM_hermitian_eigenvalues(benchmark::State& state) {
  const Group g = make_group({static_cast<int>(state.range(0))});
  Operator h(g);
  for (int r = 0; r < g.order(); ++r) {
    for (int c = r; c < g.order(); ++c) {
      h.at(r, c) = {1.0 / (1 + r + c), r == c ? 0.0 : 0.05};
      h.at(c, r) = std::conj(h.at(r, c));
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigenvalues(h));
  }
}
BENCHMARK(BM_hermitian_eigenvalues)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
