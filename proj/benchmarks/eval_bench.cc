#include <benchmark/benchmark.h>

#include <random>

#include "jointvec/analogy.h"
#include "jointvec/similarity.h"

namespace jointvec {
namespace {

EmbeddingTable random_table(std::size_t rows, int dim) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  std::vector<std::string> words;
  std::vector<double> values;
  for (std::size_t r = 0; r < rows; ++r) {
    words.push_back("w" + std::to_string(r));
    for (int k = 0; k < dim; ++k) values.push_back(g(rng));
  }
  return EmbeddingTable(std::move(words), dim, std::move(values));
}

void BM_SolveAnalogy(benchmark::State& state) {
  const auto table = random_table(static_cast<std::size_t>(state.range(0)), 300);
  const AnalogySolver solver(table);
  std::size_t a = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solver.solve(a % 100, a % 100 + 1, a % 100 + 2));
    ++a;
  }
}
BENCHMARK(BM_SolveAnalogy)->Arg(10000)->Arg(50000)->Unit(benchmark::kMicrosecond);

void BM_Spearman(benchmark::State& state) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u;
  std::vector<double> x(static_cast<std::size_t>(state.range(0))), y(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    x[k] = u(rng);
    y[k] = u(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(spearman(x, y));
}
BENCHMARK(BM_Spearman)->Arg(3000);

}  // namespace
}  // namespace jointvec
