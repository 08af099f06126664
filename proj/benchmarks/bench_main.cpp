#include <benchmark/benchmark.h>

#include "burnside/verify.hpp"

using namespace burnside;

namespace {

GroupPtr named(NamedGroup n, std::size_t k) {
  return std::make_shared<const FiniteGroup>(named_group(n, k));
}

}  // namespace

static void BM_SymmetricClosure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(named_group(NamedGroup::symmetric, n).order());
}
BENCHMARK(BM_SymmetricClosure)->DenseRange(4, 7);

static void BM_ConjugacyClasses(benchmark::State& state) {
  const auto g = named_group(NamedGroup::symmetric, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_classes(g).size());
}
BENCHMARK(BM_ConjugacyClasses)->DenseRange(4, 7);

static void BM_BurnsideColorings(benchmark::State& state) {
  const auto a = GroupAction::colorings(named(NamedGroup::dihedral, 12), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit_count(a));
    benchmark::DoNotOptimize(burnside_rhs(a));
    benchmark::DoNotOptimize(burnside_cc_rhs(a));
  }
}
BENCHMARK(BM_BurnsideColorings);

static void BM_InertiaOfDelooping(benchmark::State& state) {
  const auto g = named_group(NamedGroup::symmetric, static_cast<std::size_t>(state.range(0)));
  const auto bg = delooping(g);
  for (auto _ : state) benchmark::DoNotOptimize(cardinality(*inertia(bg).groupoid));
}
BENCHMARK(BM_InertiaOfDelooping)->DenseRange(3, 5);

static void BM_Formula1Equivalence(benchmark::State& state) {
  const auto a = GroupAction::colorings(named(NamedGroup::dihedral, 6), 2);
  for (auto _ : state) {
    const auto lhs = inertia(action_groupoid(a).groupoid).groupoid;
    benchmark::DoNotOptimize(groupoid_equivalent(*lhs, *formula1_rhs(a)).outcome);
  }
}
BENCHMARK(BM_Formula1Equivalence);

static void BM_FullVerification(benchmark::State& state) {
  const auto a = GroupAction::natural(named(NamedGroup::symmetric, 4));
  for (auto _ : state) benchmark::DoNotOptimize(run_full_verification(a).all_passed());
}
BENCHMARK(BM_FullVerification);
BENCHMARK_MAIN();
