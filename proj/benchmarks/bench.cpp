#include <benchmark/benchmark.h>

#include "echoes/classify.hpp"
#include "echoes/monodromy.hpp"
#include "echoes/origami.hpp"

using namespace echoes;

static void BM_CanonicalForm(benchmark::State &state)
{
  const Origami o = l_origami(state.range(0), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(canonical_form(o));
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(20)->Arg(56);

static void BM_Sl2zOrbit(benchmark::State &state)
{
  const long long d = state.range(0);
  const Origami o = l_origami((d * d - 1) / 4, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(sl2z_orbit(o).size);
}
BENCHMARK(BM_Sl2zOrbit)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_DecagonCount(benchmark::State &state)
{
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(decagon_cyclic_echo_count(n));
}
BENCHMARK(BM_DecagonCount)->Arg(3)->Arg(7)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_GroupClosure(benchmark::State &state)
{
  const auto gens = weierstrass_generators(state.range(0), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(group_closure(gens).size());
}
BENCHMARK(BM_GroupClosure)->Arg(4)->Arg(6);

static void BM_StsCensus(benchmark::State &state)
{
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_sts_orbits(n).orbit_count());
}
BENCHMARK(BM_StsCensus)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
