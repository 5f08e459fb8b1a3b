#include <benchmark/benchmark.h>

#include "plrot/catalog.hpp"
#include "plrot/obstruction.hpp"

using namespace plrot;

namespace {

void BM_ComposeThompson(benchmark::State& state) {
  CatalogEntry F = standard_F();
  const PLMap& x0 = F.generators.at("x0");
  const PLMap& x1 = F.generators.at("x1");
  PLMap w = x0;
  for (int i = 0; i < state.range(0); ++i) w = compose(w, i % 2 ? x0 : invert(x1));
  for (auto _ : state) benchmark::DoNotOptimize(compose(w, w));
  state.counters["nodes"] = static_cast<double>(w.node_count());
}
BENCHMARK(BM_ComposeThompson)->Arg(4)->Arg(16)->Arg(64);

void BM_ComposeGolden(benchmark::State& state) {
  CatalogEntry e = cleary_Ftau();
  PLMap fg = compose(e.generators.at("f"), e.generators.at("g"));
  for (auto _ : state) benchmark::DoNotOptimize(compose(fg, invert(fg)));
}
BENCHMARK(BM_ComposeGolden);

void BM_RotationSymbolic(benchmark::State& state) {
  CatalogEntry e = cleary_Ftau();
  CircleMap c = build_gamma(e.generators.at("f"), e.generators.at("g"), e.expected->s);
  for (auto _ : state) benchmark::DoNotOptimize(rotation_number(c));
}
BENCHMARK(BM_RotationSymbolic);

void BM_RotationInterval(benchmark::State& state) {
  CatalogEntry e = cleary_Ftau();
  CircleMap c = build_gamma(e.generators.at("f"), e.generators.at("g"), e.expected->s);
  // Conjugating hides the translation form, so the iteration branch runs.
  PLMap h({{c.s(), c.s()},
           {(c.s() + c.sg()) / FieldElement(e.field, 2), c.s() + (c.sg() - c.s()) / FieldElement(e.field, 3)},
           {c.sg(), c.sg()}});
  CircleMap hc = c.conjugated(h);
  RotationBudget b;
  b.q_max = 4;
  b.n_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(rotation_number(hc, b));
}
BENCHMARK(BM_RotationInterval)->Arg(1000)->Arg(10000);

void BM_SearchObstruction(benchmark::State& state) {
  CatalogEntry e = stein_Fpq(2, 3);
  const PLMap& f = e.generators.at("f");
  const PLMap& g = e.generators.at("g");
  for (auto _ : state) benchmark::DoNotOptimize(search_obstruction(f, g));
}
BENCHMARK(BM_SearchObstruction);

void BM_SearchThompsonMiss(benchmark::State& state) {
  CatalogEntry F = standard_F();
  const PLMap& x0 = F.generators.at("x0");
  const PLMap& x1 = F.generators.at("x1");
  for (auto _ : state) benchmark::DoNotOptimize(search_obstruction(compose(x0, x0), compose(x0, x1)));
}
BENCHMARK(BM_SearchThompsonMiss);

}  // namespace

BENCHMARK_MAIN();
