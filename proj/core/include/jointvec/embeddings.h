#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jointvec/model.h"
#include "jointvec/vocabulary.h"

namespace jointvec {

// Final word vectors keyed by word. Row order is the vocabulary id order.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  // vectors.size() must equal words.size() * dim.
  EmbeddingTable(std::vector<std::string> words, int dim,
                 std::vector<double> vectors);

  std::size_t size() const { return words_.size(); }
  int dim() const { return dim_; }
  const std::vector<std::string>& words() const { return words_; }
  const std::string& word(std::size_t row) const { return words_.at(row); }
  std::optional<std::size_t> find(std::string_view word) const;
  std::span<const double> vector(std::size_t row) const {
    return {values_.data() + row * dim_, static_cast<std::size_t>(dim_)};
  }
  std::span<const double> values() const { return values_; }

  friend bool operator==(const EmbeddingTable& a, const EmbeddingTable& b) {
    return a.dim_ == b.dim_ && a.words_ == b.words_ && a.values_ == b.values_;
  }

 private:
  std::vector<std::string> words_;
  int dim_ = 0;
  std::vector<double> values_;
  std::unordered_map<std::string, std::size_t> index_;
};

// vector(w_i) = w_i + w~_i.
EmbeddingTable compose_embeddings(const Model& model, const Vocabulary& vocab);

// Text format: "|V| d" header, then "word v1 ... vd" with 6 significant
// digits.
void export_embeddings(const EmbeddingTable& table, std::ostream& out);
void export_embeddings(const EmbeddingTable& table,
                       const std::filesystem::path& path);
EmbeddingTable parse_embeddings(std::istream& in,
                                const std::string& source = "<stream>");
EmbeddingTable parse_embeddings(const std::filesystem::path& path);

}  // namespace jointvec
