#include <benchmark/benchmark.h>

#include "cs/corpus.hpp"
#include "cs/search.hpp"

namespace {

void BM_DecideCorpusEntry(benchmark::State& state) {
  auto corpus = cs::standard_corpus();
  const cs::CorpusEntry& entry = corpus[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) {
    auto verdict = cs::decide_formula(entry.formula);
    benchmark::DoNotOptimize(verdict);
  }
  state.SetLabel(entry.name);
}

void BM_ParseRoundTrip(benchmark::State& state) {
  std::string text = "[b]([b]((p -> q) -> p) -> p) -> [d][b]((p -> q) -> p)";
  for (auto _ : state) {
    auto f = cs::parse_formula(text);
    benchmark::DoNotOptimize(cs::print_formula(f));
  }
}

void BM_RefuteSemantic(benchmark::State& state) {
  cs::Formula f = cs::parse_formula("[d]p -> [d][b]p");
  int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto hit = cs::refute_semantic(f, bound);
    benchmark::DoNotOptimize(hit);
  }
}

void BM_EnumerateFormulas(benchmark::State& state) {
  for (auto _ : state) {
    auto fs = cs::enumerate_formulas({"p"}, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(fs);
  }
}

}  // namespace

BENCHMARK(BM_DecideCorpusEntry)->DenseRange(0, 13);
BENCHMARK(BM_ParseRoundTrip);
BENCHMARK(BM_RefuteSemantic)->Arg(2)->Arg(3);
BENCHMARK(BM_EnumerateFormulas)->Arg(4)->Arg(6);
