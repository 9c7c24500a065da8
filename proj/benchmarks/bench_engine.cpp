#include <benchmark/benchmark.h>

#include "commaforge/commaforge.hpp"

using namespace commaforge;

namespace {

CategoryRef diamond() { return fixtures::diamond(); }

void BM_arrow_category_diamond(benchmark::State& state) {
  auto base = diamond();
  for (auto _ : state) {
    auto ac = make_arrow_category(base);
    benchmark::DoNotOptimize(ac.cat()->arrow_count());
  }
}
BENCHMARK(BM_arrow_category_diamond);

void BM_tower_level(benchmark::State& state) {
  auto base = fixtures::walking_arrow();
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    LevelTower tower(base);
    benchmark::DoNotOptimize(tower.level(n)->arrow_count());
  }
}
BENCHMARK(BM_tower_level)->Arg(2)->Arg(3)->Arg(4);

void BM_functor_category_two_two(benchmark::State& state) {
  auto idx = fixtures::index_two();
  auto target = fixtures::chain(3);
  for (auto _ : state) {
    auto fc = make_functor_category(idx, target);
    benchmark::DoNotOptimize(fc.realized()->arrow_count());
  }
}
BENCHMARK(BM_functor_category_two_two);

void BM_modulator_roundtrip(benchmark::State& state) {
  auto two = fixtures::walking_arrow();
  auto idx = fixtures::index_two();
  for (auto _ : state) {
    Functor L = modulator_L(two, idx);
    Functor K = modulator_K(two, idx);
    benchmark::DoNotOptimize(check_iso(IsoWitness{L, K}).ok());
  }
}
BENCHMARK(BM_modulator_roundtrip);

void BM_limit_diamond_pair(benchmark::State& state) {
  auto base = diamond();
  Functor diagram(fixtures::index_two_discrete(), base, {{"a1", "a"}, {"a2", "b"}},
                  {{"id_a1", "id_a"}, {"id_a2", "id_b"}});
  for (auto _ : state) {
    auto cert = limit(diagram);
    benchmark::DoNotOptimize(cert.has_value());
  }
}
BENCHMARK(BM_limit_diamond_pair);

void BM_propagate_limit_level2(benchmark::State& state) {
  auto base = diamond();
  Functor diagram(fixtures::index_two_discrete(), base, {{"a1", "a"}, {"a2", "b"}},
                  {{"id_a1", "id_a"}, {"id_a2", "id_b"}});
  for (auto _ : state) {
    LimitCertificate cert = propagate_limit(diagram, 2);
    benchmark::DoNotOptimize(cert.mediators.size());
  }
}
BENCHMARK(BM_propagate_limit_level2);

void BM_parse_galois(benchmark::State& state) {
  const std::string text = R"(
category Two { objects: 0, 1; arrows: e: 0 -> 1; }
category Three { objects: 0, 1, 2; arrows: e01: 0 -> 1, e02: 0 -> 2, e12: 1 -> 2; }
functor F: Two -> Three { obj 0 |-> 0, 1 |-> 2; arr e |-> e02; }
functor G: Three -> Two { obj 0 |-> 0, 1 |-> 0, 2 |-> 1; arr e01 |-> id_0, e02 |-> e, e12 |-> e; }
)";
  for (auto _ : state) {
    Workspace ws = parse(text);
    benchmark::DoNotOptimize(ws.category_order().size());
  }
}
BENCHMARK(BM_parse_galois);

}  // namespace

BENCHMARK_MAIN();
