#include "jointvec/vocabulary.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>

#include "binary_io.h"
#include "jointvec/error.h"
#include "jointvec/tokenizer.h"

namespace jointvec {

std::optional<WordId> Vocabulary::find(std::string_view word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Vocabulary::rebuild_index() {
  index_.clear();
  index_.reserve(words_.size());
  for (std::size_t id = 0; id < words_.size(); ++id) {
    index_.emplace(words_[id], static_cast<WordId>(id));
  }
}

Vocabulary Vocabulary::from_counts(
    const std::unordered_map<std::string, std::uint64_t>& counts,
    std::uint64_t min_count) {
  if (min_count < 1) throw std::invalid_argument("min_count must be >= 1");
  std::vector<std::pair<std::string, std::uint64_t>> kept;
  for (const auto& [word, count] : counts) {
    if (count >= min_count) kept.emplace_back(word, count);
  }
  if (kept.empty()) {
    throw EmptyVocabularyError("no token occurs at least " +
                               std::to_string(min_count) + " times");
  }
  if (kept.size() > std::numeric_limits<WordId>::max()) {
    throw Error("vocabulary exceeds 2^32 words");
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  Vocabulary vocab;
  vocab.min_count_ = min_count;
  vocab.words_.reserve(kept.size());
  vocab.counts_.reserve(kept.size());
  for (auto& [word, count] : kept) {
    vocab.words_.push_back(std::move(word));
    vocab.counts_.push_back(count);
  }
  vocab.rebuild_index();
  return vocab;
}

Vocabulary build_vocab(std::istream& corpus, std::uint64_t min_count) {
  std::unordered_map<std::string, std::uint64_t> counts;
  std::string line;
  while (std::getline(corpus, line)) {
    for (auto& token : tokenize_line(line)) ++counts[std::move(token)];
  }
  return Vocabulary::from_counts(counts, min_count);
}

Vocabulary build_vocab(std::span<const std::string> lines,
                       std::uint64_t min_count) {
  std::unordered_map<std::string, std::uint64_t> counts;
  for (const auto& line : lines) {
    for (auto& token : tokenize_line(line)) ++counts[std::move(token)];
  }
  return Vocabulary::from_counts(counts, min_count);
}

void save_vocab(const Vocabulary& vocab, std::ostream& out) {
  for (std::size_t id = 0; id < vocab.size(); ++id) {
    out << vocab.words()[id] << ' ' << vocab.counts()[id] << '\n';
  }
}

void save_vocab(const Vocabulary& vocab, const std::filesystem::path& path) {
  auto out = detail::open_output(path, false);
  save_vocab(vocab, out);
  detail::check_written(out, path);
}

Vocabulary load_vocab(std::istream& in, const std::string& source) {
  Vocabulary vocab;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto space = line.rfind(' ');
    if (space == std::string::npos || space == 0) {
      throw ParseError(source, lineno, "expected 'word count'");
    }
    std::string word = line.substr(0, space);
    if (word.find(' ') != std::string::npos) {
      throw ParseError(source, lineno, "expected 'word count'");
    }
    std::uint64_t count = 0;
    const char* first = line.data() + space + 1;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, count);
    if (ec != std::errc() || ptr != last || first == last) {
      throw ParseError(source, lineno, "bad count");
    }
    if (!vocab.counts_.empty()) {
      const auto prev = vocab.counts_.back();
      if (count > prev || (count == prev && word <= vocab.words_.back())) {
        throw ParseError(source, lineno,
                         "entries not in (descending count, word) order");
      }
    }
    vocab.words_.push_back(std::move(word));
    vocab.counts_.push_back(count);
  }
  if (vocab.words_.empty()) {
    throw EmptyVocabularyError(source + ": vocabulary file is empty");
  }
  vocab.min_count_ = std::max<std::uint64_t>(1, vocab.counts_.back());
  vocab.rebuild_index();
  return vocab;
}

Vocabulary load_vocab(const std::filesystem::path& path) {
  auto in = detail::open_input(path, false);
  return load_vocab(in, path.string());
}

}  // namespace jointvec
