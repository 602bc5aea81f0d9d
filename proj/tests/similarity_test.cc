#include "jointvec/similarity.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "jointvec/error.h"
#include "oracles.h"

namespace jointvec {
namespace {

using Vec = std::vector<double>;

TEST(Cosine, Examples) {
  EXPECT_EQ(cosine(Vec{1, 0}, Vec{0, 1}), 0.0);
  EXPECT_NEAR(cosine(Vec{3, -4, 2}, Vec{3, -4, 2}), 1.0, 1e-15);
  EXPECT_NEAR(cosine(Vec{1, 1}, Vec{1, 0}), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Cosine, ZeroVectorIsAnError) {
  EXPECT_THROW(cosine(Vec{0, 0}, Vec{1, 0}), DomainError);
  EXPECT_THROW(cosine(Vec{1}, Vec{1, 0}), DomainError);
}

TEST(Spearman, Examples) {
  EXPECT_EQ(spearman(Vec{1, 2, 3, 4}, Vec{10, 20, 30, 40}), 1.0);
  EXPECT_EQ(spearman(Vec{1, 2, 3, 4}, Vec{4, 3, 2, 1}), -1.0);
  // 1 - 6 * 2 / 24
  EXPECT_NEAR(spearman(Vec{1, 2, 3}, Vec{1, 3, 2}), 0.5, 1e-15);
}

TEST(Spearman, TiesGetAverageRanks) {
  EXPECT_EQ(average_ranks(Vec{10, 20, 20, 30}), (Vec{1, 2.5, 2.5, 4}));
  // Pearson of ranks [1,2.5,2.5,4] and [1,2,3,4]: cov = 4.5, var = 4.5 and 5.
  EXPECT_NEAR(spearman(Vec{1, 2, 2, 3}, Vec{1, 2, 3, 4}),
              4.5 / std::sqrt(4.5 * 5.0), 1e-15);
}

TEST(Spearman, DegenerateInputs) {
  EXPECT_THROW(spearman(Vec{1, 1, 1}, Vec{1, 2, 3}), DomainError);
  EXPECT_THROW(spearman(Vec{1}, Vec{1}), DomainError);
  EXPECT_THROW(spearman(Vec{1, 2}, Vec{1, 2, 3}), DomainError);
}

TEST(Spearman, MatchesRankFormulaAndIsMonotoneInvariant) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 60;
    Vec x(n), y(n);
    for (std::size_t k = 0; k < n; ++k) {
      x[k] = u(rng);
      y[k] = u(rng);
    }
    const double rho = spearman(x, y);
    EXPECT_NEAR(rho, testing::spearman_rank_formula(x, y), 1e-12);
    Vec fx(n);
    std::transform(x.begin(), x.end(), fx.begin(),
                   [](double v) { return std::exp(v) * 3 + 1; });
    EXPECT_NEAR(spearman(fx, y), rho, 1e-12);
    EXPECT_NEAR(spearman(x, x), 1.0, 1e-12);
  }
}

TEST(FisherSignificance, Examples) {
  const auto zero = fisher_significance(0.0, 30);
  EXPECT_EQ(zero.z, 0.0);
  EXPECT_EQ(zero.p, 1.0);
  const auto half = fisher_significance(0.5, 30);
  EXPECT_NEAR(half.z, std::atanh(0.5) * std::sqrt(27.0), 1e-12);
  EXPECT_NEAR(half.z, 2.8543, 1e-3);
  EXPECT_NEAR(half.p, 0.004313, 1e-5);
  EXPECT_EQ(fisher_significance(-0.5, 30).z, -half.z);
}

TEST(FisherSignificance, DomainChecks) {
  EXPECT_THROW(fisher_significance(1.0, 30), DomainError);
  EXPECT_THROW(fisher_significance(-1.2, 30), DomainError);
  EXPECT_THROW(fisher_significance(0.3, 3), DomainError);
}

EmbeddingTable line_table() {
  // Five words on the unit circle at increasing angles from "base".
  std::vector<std::string> words = {"base", "w1", "w2", "w3", "w4", "w5"};
  std::vector<double> values = {1, 0};
  for (int k = 1; k <= 5; ++k) {
    values.push_back(std::cos(0.3 * k));
    values.push_back(std::sin(0.3 * k));
  }
  return EmbeddingTable(words, 2, values);
}

SimilarityDataset parse(const std::string& text) {
  std::istringstream in(text);
  return load_similarity_dataset(in, "toy");
}

TEST(EvalSimilarity, PerfectOrdering) {
  const auto ds = parse("base\tw1\t9\nbase\tw2\t7\nBASE\tW3\t5\nbase\tw4\t3\n"
                        "base\tw5\t1\n");
  const auto report = eval_similarity(line_table(), ds);
  EXPECT_EQ(report.n_scored, 5u);
  EXPECT_EQ(report.value, 1.0);
  EXPECT_EQ(report.coverage(), 1.0);
  EXPECT_FALSE(report.z.has_value());  // |rho| = 1
}

TEST(EvalSimilarity, OutOfVocabularyPairsAreSkipped) {
  const auto ds = parse("# comment\nbase\tw1\t9\nbase\tw2\t8\nbase\tzzz\t7\n"
                        "base\tw3\t1\nw4\tw5\t6\n");
  const auto table = line_table();
  const auto report = eval_similarity(table, ds);
  EXPECT_EQ(report.n_total, 5u);
  EXPECT_EQ(report.n_scored, 4u);

  // Same as spearman on the hand-filtered lists.
  Vec gold, pred;
  for (const auto& p : ds.pairs) {
    auto a = table.find(p.first), b = table.find(p.second);
    if (!a || !b) continue;
    gold.push_back(p.gold);
    pred.push_back(cosine(table.vector(*a), table.vector(*b)));
  }
  EXPECT_EQ(*report.value, spearman(gold, pred));
  ASSERT_TRUE(report.z.has_value());
  EXPECT_EQ(*report.z, fisher_significance(*report.value, 4).z);
}

TEST(EvalSimilarity, IndependentOfPairOrder) {
  auto ds = parse("base\tw1\t2\nbase\tw2\t9\nw1\tw3\t4\nw2\tw5\t1\nw4\tw1\t7\n");
  const auto first = eval_similarity(line_table(), ds);
  std::reverse(ds.pairs.begin(), ds.pairs.end());
  EXPECT_EQ(eval_similarity(line_table(), ds).value, first.value);
}

TEST(EvalSimilarity, InsufficientCoverage) {
  EXPECT_THROW(eval_similarity(line_table(), parse("base\tw1\t1\nx\ty\t2\n")),
               InsufficientCoverageError);
  EXPECT_THROW(eval_similarity(line_table(), parse("")),
               InsufficientCoverageError);
}

TEST(SimilarityDataset, ParseErrors) {
  EXPECT_THROW(parse("a\tb\n"), ParseError);
  EXPECT_THROW(parse("a\tb\tx\n"), ParseError);
  EXPECT_THROW(parse("a\tb\t1\nA\tB\t2\n"), ParseError);  // duplicate
}

TEST(ReportRow, Format) {
  EvalReport r;
  r.dataset = "rg";
  r.metric = "spearman";
  r.value = 0.5;
  r.n_scored = 30;
  r.n_total = 32;
  r.z = 2.8543;
  r.p = 0.0043;
  std::ostringstream out;
  write_report_row(r, out);
  EXPECT_EQ(out.str(), "rg\tspearman\t0.500000\t30\t32\t2.854300\t0.004300\n");
  r.z.reset();
  r.p.reset();
  std::ostringstream out2;
  write_report_row(r, out2);
  EXPECT_EQ(out2.str(), "rg\tspearman\t0.500000\t30\t32\t\t\n");
}

}  // namespace
}  // namespace jointvec
