#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "jointvec/vocabulary.h"

namespace jointvec {

inline constexpr int kDefaultWindow = 10;
// Counts are accumulated as integers scaled by lcm(1..window), which keeps
// accumulation exact and order independent; the scale must fit comfortably
// in 64 bits.
inline constexpr int kMaxWindow = 20;

struct CoocEntry {
  WordId target = 0;
  WordId context = 0;
  double count = 0.0;

  friend bool operator==(const CoocEntry&, const CoocEntry&) = default;
};

// Sparse distance-weighted co-occurrence matrix. Entries are sorted by
// (target, context), unique, and strictly positive.
class CoocMatrix {
 public:
  CoocMatrix() = default;
  // Validates the invariants above; throws FormatError on violation.
  CoocMatrix(std::uint64_t vocab_size, std::vector<CoocEntry> entries,
             int window = 0);

  std::uint64_t vocab_size() const { return vocab_size_; }
  std::size_t nnz() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // Window the matrix was counted with; 0 when unknown (e.g. loaded from
  // disk, where the format does not record it).
  int window() const { return window_; }
  std::span<const CoocEntry> entries() const { return entries_; }

  // 0 when absent. O(log nnz).
  double at(WordId target, WordId context) const;
  double total_mass() const;

  // Window is metadata only and does not take part in comparison.
  friend bool operator==(const CoocMatrix& a, const CoocMatrix& b) {
    return a.vocab_size_ == b.vocab_size_ && a.entries_ == b.entries_;
  }

 private:
  std::uint64_t vocab_size_ = 0;
  std::vector<CoocEntry> entries_;
  int window_ = 0;
};

// Counts every ordered pair of in-vocabulary tokens on the same line at
// surface distance 1 <= l <= window, adding 1/l. Lines are split into
// `threads` shards whose integer counts are merged exactly, so the result
// does not depend on the thread count.
CoocMatrix build_cooccurrence(std::span<const std::string> lines,
                              const Vocabulary& vocab,
                              int window = kDefaultWindow, int threads = 1);
CoocMatrix build_cooccurrence(std::istream& corpus, const Vocabulary& vocab,
                              int window = kDefaultWindow, int threads = 1);

// Binary little-endian: "LXCO", u32 version, u64 vocab_size, u64 nnz, then
// nnz records of (u32 target, u32 context, f64 count).
inline constexpr std::uint32_t kCoocFormatVersion = 1;

void save_cooc(const CoocMatrix& matrix, std::ostream& out);
void save_cooc(const CoocMatrix& matrix, const std::filesystem::path& path);
CoocMatrix load_cooc(std::istream& in);
CoocMatrix load_cooc(const std::filesystem::path& path);

}  // namespace jointvec
