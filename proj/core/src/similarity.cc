#include "jointvec/similarity.h"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>

#include "binary_io.h"
#include "jointvec/error.h"
#include "jointvec/tokenizer.h"

namespace jointvec {

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw DomainError("cosine: dimension mismatch");
  double dot = 0.0, uu = 0.0, vv = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    dot += u[k] * v[k];
    uu += u[k] * u[k];
    vv += v[k] * v[k];
  }
  if (uu == 0.0 || vv == 0.0) throw DomainError("cosine of a zero vector");
  return std::clamp(dot / (std::sqrt(uu) * std::sqrt(vv)), -1.0, 1.0);
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  std::size_t k = 0;
  while (k < order.size()) {
    std::size_t end = k + 1;
    while (end < order.size() && values[order[end]] == values[order[k]]) ++end;
    // Positions k..end-1 hold equal values; 1-based ranks k+1..end.
    const double rank = (static_cast<double>(k + 1) + static_cast<double>(end)) / 2.0;
    for (std::size_t m = k; m < end; ++m) ranks[order[m]] = rank;
    k = end;
  }
  return ranks;
}

double spearman(std::span<const double> gold, std::span<const double> pred) {
  if (gold.size() != pred.size()) {
    throw DomainError("spearman: lists differ in length");
  }
  if (gold.size() < 2) throw DomainError("spearman: need at least 2 items");
  const auto rg = average_ranks(gold);
  const auto rp = average_ranks(pred);
  const double n = static_cast<double>(rg.size());
  const double mean = (n + 1.0) / 2.0;
  double cov = 0.0, var_g = 0.0, var_p = 0.0;
  for (std::size_t k = 0; k < rg.size(); ++k) {
    const double dg = rg[k] - mean;
    const double dp = rp[k] - mean;
    cov += dg * dp;
    var_g += dg * dg;
    var_p += dp * dp;
  }
  if (var_g == 0.0 || var_p == 0.0) {
    throw DomainError("spearman: constant ranks on one side");
  }
  return std::clamp(cov / std::sqrt(var_g * var_p), -1.0, 1.0);
}

FisherResult fisher_significance(double rho, std::size_t n) {
  if (!(std::abs(rho) < 1.0)) {
    throw DomainError("fisher transform needs |rho| < 1");
  }
  if (n < 4) throw DomainError("fisher transform needs n >= 4");
  FisherResult result;
  result.z = std::atanh(rho) * std::sqrt(static_cast<double>(n - 3));
  result.p = std::erfc(std::abs(result.z) / std::sqrt(2.0));
  return result;
}

SimilarityDataset load_similarity_dataset(std::istream& in,
                                          const std::string& name) {
  SimilarityDataset ds;
  ds.name = name;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab1 = line.find('\t');
    const auto tab2 =
        tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos ||
        line.find('\t', tab2 + 1) != std::string::npos) {
      throw ParseError(name, lineno, "expected word1<TAB>word2<TAB>score");
    }
    SimilarityPair pair;
    pair.first = to_lower_utf8(std::string_view(line).substr(0, tab1));
    pair.second =
        to_lower_utf8(std::string_view(line).substr(tab1 + 1, tab2 - tab1 - 1));
    const char* first = line.data() + tab2 + 1;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, pair.gold);
    if (ec != std::errc() || ptr != last || !std::isfinite(pair.gold)) {
      throw ParseError(name, lineno, "bad score");
    }
    if (pair.first.empty() || pair.second.empty()) {
      throw ParseError(name, lineno, "empty word");
    }
    if (!seen.emplace(pair.first, pair.second).second) {
      throw ParseError(name, lineno,
                       "duplicate pair " + pair.first + " " + pair.second);
    }
    ds.pairs.push_back(std::move(pair));
  }
  return ds;
}

SimilarityDataset load_similarity_dataset(const std::filesystem::path& path) {
  auto in = detail::open_input(path, false);
  return load_similarity_dataset(in, path.stem().string());
}

EvalReport eval_similarity(const EmbeddingTable& table,
                           const SimilarityDataset& dataset) {
  if (dataset.pairs.empty()) {
    throw InsufficientCoverageError(dataset.name + ": dataset is empty");
  }
  EvalReport report;
  report.dataset = dataset.name;
  report.metric = "spearman";
  report.n_total = dataset.pairs.size();
  std::vector<double> gold, pred;
  for (const auto& pair : dataset.pairs) {
    const auto a = table.find(pair.first);
    const auto b = table.find(pair.second);
    if (!a || !b) continue;
    gold.push_back(pair.gold);
    pred.push_back(cosine(table.vector(*a), table.vector(*b)));
  }
  report.n_scored = gold.size();
  if (report.n_scored < 2) {
    throw InsufficientCoverageError(
        dataset.name + ": only " + std::to_string(report.n_scored) +
        " of " + std::to_string(report.n_total) + " pairs are in vocabulary");
  }
  const double rho = spearman(gold, pred);
  report.value = rho;
  if (report.n_scored >= 4 && std::abs(rho) < 1.0) {
    const auto sig = fisher_significance(rho, report.n_scored);
    report.z = sig.z;
    report.p = sig.p;
  }
  return report;
}

}  // namespace jointvec
