#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jointvec/embeddings.h"
#include "jointvec/report.h"

namespace jointvec {

using AnalogyQuestion = std::array<std::string, 4>;  // a : b :: c : d

struct AnalogySection {
  std::string label;
  std::vector<AnalogyQuestion> questions;
};

struct AnalogyDataset {
  std::string name;
  std::vector<AnalogySection> sections;
};

// Google format: ": label" starts a section, other lines hold 4 words.
// Questions before the first header land in a section named "default".
AnalogyDataset load_analogy_dataset(std::istream& in, const std::string& name);
AnalogyDataset load_analogy_dataset(const std::filesystem::path& path);

// 3CosAdd over the whole table. Rows are normalised once at construction.
class AnalogySolver {
 public:
  explicit AnalogySolver(const EmbeddingTable& table);

  // Row maximising cos(v_w, v_b - v_a + v_c) over all rows except a, b, c;
  // ties go to the lowest row. Rows must be valid indices.
  std::size_t solve(std::size_t a, std::size_t b, std::size_t c) const;
  // nullopt when any query word is out of vocabulary.
  std::optional<std::string> solve(std::string_view a, std::string_view b,
                                   std::string_view c) const;

 private:
  const EmbeddingTable& table_;
  std::vector<double> normalized_;
  std::vector<char> usable_;  // zero rows cannot be ranked by cosine
};

std::optional<std::string> solve_analogy(const EmbeddingTable& table,
                                         std::string_view a, std::string_view b,
                                         std::string_view c);

struct AnalogyReport {
  EvalReport total;
  std::vector<EvalReport> sections;
};

// A question counts as scored only when all four words are in the table.
// Throws InsufficientCoverageError when nothing is scored.
AnalogyReport eval_analogy(const EmbeddingTable& table,
                           const AnalogyDataset& dataset);

}  // namespace jointvec
