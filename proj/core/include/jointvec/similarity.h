#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "jointvec/embeddings.h"
#include "jointvec/report.h"

namespace jointvec {

// u.v / (|u| |v|). Throws DomainError on a zero vector or a size mismatch.
double cosine(std::span<const double> u, std::span<const double> v);

// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> average_ranks(std::span<const double> values);

// Pearson correlation of average ranks. Throws DomainError when the lengths
// differ, n < 2, or either side has constant ranks.
double spearman(std::span<const double> gold, std::span<const double> pred);

struct FisherResult {
  double z = 0.0;
  double p = 1.0;  // two-sided
};

// z = atanh(rho) * sqrt(n - 3). Requires |rho| < 1 and n >= 4.
FisherResult fisher_significance(double rho, std::size_t n);

struct SimilarityPair {
  std::string first;
  std::string second;
  double gold = 0.0;
};

struct SimilarityDataset {
  std::string name;
  std::vector<SimilarityPair> pairs;
};

// `word1<TAB>word2<TAB>score` lines; '#' comments and blank lines skipped.
// Words are lowercased. Duplicate ordered pairs are a ParseError.
SimilarityDataset load_similarity_dataset(std::istream& in,
                                          const std::string& name);
SimilarityDataset load_similarity_dataset(const std::filesystem::path& path);

// Pairs with an out-of-vocabulary word are skipped and reflected in coverage.
// Throws InsufficientCoverageError with fewer than 2 scored pairs.
EvalReport eval_similarity(const EmbeddingTable& table,
                           const SimilarityDataset& dataset);

}  // namespace jointvec
