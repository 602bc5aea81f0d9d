#include <benchmark/benchmark.h>

#include "corpus.h"
#include "jointvec/cooccurrence.h"
#include "jointvec/objective.h"
#include "jointvec/trainer.h"
#include "jointvec/vocabulary.h"

namespace jointvec {
namespace {

struct Fixture {
  Vocabulary vocab;
  CoocMatrix cooc;
  RelationSet rel;
};

const Fixture& fixture() {
  static const Fixture f = [] {
    Fixture out;
    const auto lines = bench::zipf_lines(200000, 5000);
    out.vocab = build_vocab(std::span<const std::string>(lines), 5);
    out.cooc = build_cooccurrence(lines, out.vocab, 10);
    std::vector<WordPair> pairs;
    for (WordId i = 0; i + 1 < out.vocab.size(); i += 7) pairs.emplace_back(i, i + 1);
    out.rel = RelationSet("synonym", out.vocab.size(), pairs);
    return out;
  }();
  return f;
}

// One epoch at dimension range(0) with range(1) threads.
void BM_TrainEpoch(benchmark::State& state) {
  const auto& f = fixture();
  Hyperparams hp;
  hp.dim = static_cast<int>(state.range(0));
  hp.threads = static_cast<int>(state.range(1));
  hp.epochs = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(train(f.cooc, f.rel, hp));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(f.cooc.nnz()));
}
BENCHMARK(BM_TrainEpoch)
    ->Args({50, 1})
    ->Args({50, 4})
    ->Args({300, 1})
    ->Unit(benchmark::kMillisecond);

void BM_ObjectiveTotal(benchmark::State& state) {
  const auto& f = fixture();
  Hyperparams hp;
  hp.dim = 50;
  hp.epochs = 1;
  const Model model = train(f.cooc, f.rel, hp);
  for (auto _ : state) {
    benchmark::DoNotOptimize(objective_total(model, f.cooc, f.rel, hp));
  }
}
BENCHMARK(BM_ObjectiveTotal)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace jointvec
