#include <benchmark/benchmark.h>

#include <random>

#include "legknot/corpus.hpp"
#include "legknot/moves.hpp"
#include "legknot/search.hpp"

using namespace legknot;

namespace {

void BM_CanonicalForm(benchmark::State& state) {
  std::mt19937_64 rng(9);
  std::vector<DiagramWord> words;
  for (int k = 0; k < 64; ++k) words.push_back(random_diagram(rng, {static_cast<int>(state.range(0)), 6}));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(words[i++ % words.size()]));
}

void BM_SearchR2Pair(benchmark::State& state) {
  const auto a = parse_diagram("Cup1 Xp1 Xn1 Cap1");
  SearchBudget b;
  b.max_depth = 2;
  for (auto _ : state) benchmark::DoNotOptimize(search_equivalent(a, unknot_diagram(), b));
}

void BM_SearchKinkSlide(benchmark::State& state) {
  const auto host = parse_diagram("Cup1 Cup1 Xp2 Cap1 Cap1");
  const auto a = insert_kink(host, KinkType::pp(), {1, 1});
  const auto c = insert_kink(host, KinkType::pp(), {2, 1});
  SearchBudget b;
  b.max_depth = 8;
  std::size_t states = 0;
  for (auto _ : state) states = search_equivalent(a, c, b).states_visited;
  state.counters["states"] = static_cast<double>(states);
}

void BM_KinkPairCancel(benchmark::State& state) {
  const auto u = unknot_diagram();
  const auto a = insert_kink(insert_kink(u, KinkType::pp(), {1, 1}), KinkType::nn(), {4, 1});
  SearchBudget b;
  b.max_depth = 8;
  std::size_t states = 0;
  for (auto _ : state) states = search_equivalent(a, u, b).states_visited;
  state.counters["states"] = static_cast<double>(states);
}

}  // namespace

BENCHMARK(BM_CanonicalForm)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_SearchR2Pair);
BENCHMARK(BM_SearchKinkSlide)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_KinkPairCancel)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
