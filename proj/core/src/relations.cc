#include "jointvec/relations.h"

#include <algorithm>
#include <iostream>
#include <stdexcept>

#include "binary_io.h"
#include "jointvec/error.h"
#include "jointvec/tokenizer.h"

namespace jointvec {

RelationSet::RelationSet(std::string name, std::uint64_t vocab_size,
                         std::vector<WordPair> pairs)
    : name_(std::move(name)), vocab_size_(vocab_size), pairs_(std::move(pairs)) {
  for (const auto& [i, j] : pairs_) {
    if (i >= vocab_size_ || j >= vocab_size_) {
      throw std::out_of_range("relation pair id outside the vocabulary");
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());

  out_offsets_.assign(vocab_size_ + 1, 0);
  in_offsets_.assign(vocab_size_ + 1, 0);
  for (const auto& [i, j] : pairs_) {
    ++out_offsets_[i + 1];
    ++in_offsets_[j + 1];
  }
  for (std::size_t k = 0; k < vocab_size_; ++k) {
    out_offsets_[k + 1] += out_offsets_[k];
    in_offsets_[k + 1] += in_offsets_[k];
  }
  out_targets_.resize(pairs_.size());
  in_sources_.resize(pairs_.size());
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // pairs_ is sorted by source, so out_targets_ is filled in place.
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    const auto& [i, j] = pairs_[k];
    out_targets_[k] = j;
    in_sources_[in_fill[j]++] = i;
  }
  lookup_.reserve(pairs_.size());
  for (const auto& [i, j] : pairs_) lookup_.insert(key(i, j));
}

std::span<const WordId> RelationSet::out_edges(WordId i) const {
  if (i >= vocab_size_) return {};
  return std::span<const WordId>(out_targets_)
      .subspan(out_offsets_[i], out_offsets_[i + 1] - out_offsets_[i]);
}

std::span<const WordId> RelationSet::in_edges(WordId j) const {
  if (j >= vocab_size_) return {};
  return std::span<const WordId>(in_sources_)
      .subspan(in_offsets_[j], in_offsets_[j + 1] - in_offsets_[j]);
}

RelationSet symmetrize(const RelationSet& rel) {
  std::vector<WordPair> pairs(rel.pairs().begin(), rel.pairs().end());
  pairs.reserve(2 * pairs.size());
  for (const auto& [i, j] : rel.pairs()) pairs.emplace_back(j, i);
  RelationSet out(rel.name(), rel.vocab_size(), std::move(pairs));
  out.set_skipped_pairs(rel.skipped_pairs());
  return out;
}

RelationSet load_relations(std::istream& in, const std::string& relation_filter,
                           const Vocabulary& vocab, bool symmetric,
                           const std::string& source) {
  std::vector<WordPair> pairs;
  std::size_t skipped = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab1 = line.find('\t');
    const auto tab2 =
        tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos ||
        line.find('\t', tab2 + 1) != std::string::npos) {
      throw ParseError(source, lineno,
                       "expected relation<TAB>head<TAB>tail");
    }
    const std::string_view view(line);
    const auto label = view.substr(0, tab1);
    const auto head = view.substr(tab1 + 1, tab2 - tab1 - 1);
    const auto tail = view.substr(tab2 + 1);
    if (label.empty() || head.empty() || tail.empty()) {
      throw ParseError(source, lineno, "empty field");
    }
    if (label != relation_filter) continue;
    auto i = vocab.find(to_lower_utf8(head));
    auto j = vocab.find(to_lower_utf8(tail));
    if (!i || !j) {
      ++skipped;
      continue;
    }
    pairs.emplace_back(*i, *j);
  }
  RelationSet rel(relation_filter, vocab.size(), std::move(pairs));
  if (symmetric) rel = symmetrize(rel);
  rel.set_skipped_pairs(skipped);
  if (rel.empty()) {
    std::clog << "warning: " << source << ": no '" << relation_filter
              << "' pairs survive the vocabulary (" << skipped
              << " skipped); the lexicon term is inactive\n";
  }
  return rel;
}

RelationSet load_relations(const std::filesystem::path& path,
                           const std::string& relation_filter,
                           const Vocabulary& vocab, bool symmetric) {
  auto in = detail::open_input(path, false);
  return load_relations(in, relation_filter, vocab, symmetric, path.string());
}

}  // namespace jointvec
