#include <benchmark/benchmark.h>

#include "corpus.h"
#include "jointvec/cooccurrence.h"
#include "jointvec/vocabulary.h"

namespace jointvec {
namespace {

void BM_BuildVocab(benchmark::State& state) {
  const auto lines = bench::zipf_lines(state.range(0), 5000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_vocab(std::span<const std::string>(lines), 5));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildVocab)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_BuildCooccurrence(benchmark::State& state) {
  const auto lines = bench::zipf_lines(state.range(0), 5000);
  const auto vocab = build_vocab(std::span<const std::string>(lines), 5);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_cooccurrence(lines, vocab, 10, threads));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildCooccurrence)
    ->Args({100000, 1})
    ->Args({100000, 4})
    ->Args({400000, 1})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace jointvec
