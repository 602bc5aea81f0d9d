#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace jointvec {

using WordId = std::uint32_t;

inline constexpr std::uint64_t kDefaultMinCount = 20;

// Frozen word <-> id map. Ids are dense, 0-based, and assigned in descending
// frequency order with ties broken lexicographically.
class Vocabulary {
 public:
  Vocabulary() = default;

  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  const std::string& word(WordId id) const { return words_.at(id); }
  std::uint64_t count(WordId id) const { return counts_.at(id); }
  std::optional<WordId> find(std::string_view word) const;
  bool contains(std::string_view word) const { return find(word).has_value(); }

  const std::vector<std::string>& words() const { return words_; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::uint64_t min_count() const { return min_count_; }

  // Builds from already-counted words. Entries below min_count are dropped;
  // throws EmptyVocabularyError if nothing survives.
  static Vocabulary from_counts(
      const std::unordered_map<std::string, std::uint64_t>& counts,
      std::uint64_t min_count);

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.words_ == b.words_ && a.counts_ == b.counts_;
  }

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> words_;
  std::vector<std::uint64_t> counts_;
  std::unordered_map<std::string, WordId, StringHash, std::equal_to<>> index_;
  std::uint64_t min_count_ = 1;

  friend Vocabulary load_vocab(std::istream& in, const std::string& source);
  void rebuild_index();
};

// Counts whitespace tokens of every line and keeps those seen at least
// min_count times.
Vocabulary build_vocab(std::istream& corpus,
                       std::uint64_t min_count = kDefaultMinCount);
Vocabulary build_vocab(std::span<const std::string> lines,
                       std::uint64_t min_count = kDefaultMinCount);

// Text format: one "word count" per line, in id order.
void save_vocab(const Vocabulary& vocab, std::ostream& out);
void save_vocab(const Vocabulary& vocab, const std::filesystem::path& path);
Vocabulary load_vocab(std::istream& in, const std::string& source = "<stream>");
Vocabulary load_vocab(const std::filesystem::path& path);

}  // namespace jointvec
