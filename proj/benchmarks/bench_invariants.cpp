#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "legknot/corpus.hpp"
#include "legknot/gauss.hpp"
#include "legknot/invariants.hpp"
#include "legknot/moves.hpp"
#include "legknot/vassiliev.hpp"

using namespace legknot;

namespace {

std::vector<DiagramWord> corpus(int crossings) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(crossings));
  std::vector<DiagramWord> out;
  while (out.size() < 64) {
    auto d = random_diagram(rng, {crossings, 6});
    if (d.crossing_count() == crossings) out.push_back(std::move(d));
  }
  return out;
}

template <class F>
void over_corpus(benchmark::State& state, F f) {
  const auto words = corpus(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(f(words[i++ % words.size()]));
}

void BM_Writhe(benchmark::State& s) { over_corpus(s, [](const DiagramWord& d) { return writhe(d); }); }
void BM_Rotation(benchmark::State& s) {
  over_corpus(s, [](const DiagramWord& d) { return whitney_rotation(d); });
}
void BM_Gauss(benchmark::State& s) {
  over_corpus(s, [](const DiagramWord& d) { return diagram_to_gauss(d).chords.size(); });
}
void BM_V2(benchmark::State& s) { over_corpus(s, [](const DiagramWord& d) { return v2(d); }); }
void BM_V3(benchmark::State& s) { over_corpus(s, [](const DiagramWord& d) { return v3(d); }); }
void BM_ApplicableMoves(benchmark::State& s) {
  over_corpus(s, [](const DiagramWord& d) { return applicable_moves(d).size(); });
}

void BM_AlternatingSumV2(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto n = static_cast<int>(state.range(0));
  std::vector<SingularDiagramWord> words;
  for (int k = 0; k < 32; ++k) words.push_back(random_singular(rng, {6, 6, n}));
  const auto f = invariant_function("v2");
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(alternating_sum(f, words[i++ % words.size()]));
}

}  // namespace

BENCHMARK(BM_Writhe)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_Rotation)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_Gauss)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_V2)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_V3)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_ApplicableMoves)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_AlternatingSumV2)->Arg(1)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
