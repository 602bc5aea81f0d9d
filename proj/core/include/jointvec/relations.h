#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "jointvec/vocabulary.h"

namespace jointvec {

using WordPair = std::pair<WordId, WordId>;

// Directed word-pair set for one relation type. R(i, j) = 1 iff (i, j) is
// stored; (j, i) is not implied.
class RelationSet {
 public:
  RelationSet() = default;
  // Duplicates are collapsed; throws std::out_of_range for ids >= vocab_size.
  RelationSet(std::string name, std::uint64_t vocab_size,
              std::vector<WordPair> pairs);

  const std::string& name() const { return name_; }
  std::uint64_t vocab_size() const { return vocab_size_; }
  // Sorted by (target, context).
  std::span<const WordPair> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  std::span<const WordId> out_edges(WordId i) const;
  std::span<const WordId> in_edges(WordId j) const;

  bool contains(WordId i, WordId j) const {
    return lookup_.contains(key(i, j));
  }

  // Pairs in the input file that were dropped because a word was not in the
  // vocabulary.
  std::size_t skipped_pairs() const { return skipped_; }
  void set_skipped_pairs(std::size_t n) { skipped_ = n; }

  friend bool operator==(const RelationSet& a, const RelationSet& b) {
    return a.vocab_size_ == b.vocab_size_ && a.pairs_ == b.pairs_;
  }

 private:
  static std::uint64_t key(WordId i, WordId j) {
    return (std::uint64_t{i} << 32) | j;
  }

  std::string name_;
  std::uint64_t vocab_size_ = 0;
  std::vector<WordPair> pairs_;
  // CSR adjacency in both directions.
  std::vector<std::size_t> out_offsets_, in_offsets_;
  std::vector<WordId> out_targets_, in_sources_;
  std::unordered_set<std::uint64_t> lookup_;
  std::size_t skipped_ = 0;
};

// R(i, j) as 0/1.
inline int relation_indicator(const RelationSet& rel, WordId i, WordId j) {
  return rel.contains(i, j) ? 1 : 0;
}

// Closure under pair reversal. Idempotent.
RelationSet symmetrize(const RelationSet& rel);

// Reads `relation<TAB>head<TAB>tail` lines and keeps pairs whose label equals
// relation_filter and whose words are both in the vocabulary. Words are
// lowercased the same way as corpus tokens. Blank lines are ignored.
RelationSet load_relations(std::istream& in, const std::string& relation_filter,
                           const Vocabulary& vocab, bool symmetric = false,
                           const std::string& source = "<stream>");
RelationSet load_relations(const std::filesystem::path& path,
                           const std::string& relation_filter,
                           const Vocabulary& vocab, bool symmetric = false);

}  // namespace jointvec
