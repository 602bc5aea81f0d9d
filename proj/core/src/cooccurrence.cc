#include "jointvec/cooccurrence.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "binary_io.h"
#include "jointvec/error.h"
#include "jointvec/tokenizer.h"

namespace jointvec {

namespace {

constexpr std::uint32_t kOutOfVocab = std::numeric_limits<std::uint32_t>::max();
constexpr std::string_view kCoocMagic = "LXCO";

using ScaledCounts = std::unordered_map<std::uint64_t, std::uint64_t>;

std::uint64_t pair_key(WordId i, WordId j) {
  return (std::uint64_t{i} << 32) | j;
}

std::uint64_t window_scale(int window) {
  std::uint64_t scale = 1;
  for (int l = 2; l <= window; ++l) {
    scale = std::lcm(scale, static_cast<std::uint64_t>(l));
  }
  return scale;
}

void count_lines(std::span<const std::string> lines, const Vocabulary& vocab,
                 int window, std::uint64_t scale, ScaledCounts& counts) {
  std::vector<std::uint32_t> ids;
  for (const auto& line : lines) {
    ids.clear();
    for (const auto& token : tokenize_line(line)) {
      auto id = vocab.find(token);
      ids.push_back(id ? *id : kOutOfVocab);
    }
    const std::size_t n = ids.size();
    for (std::size_t p = 0; p < n; ++p) {
      if (ids[p] == kOutOfVocab) continue;
      const std::size_t end = std::min(n, p + static_cast<std::size_t>(window) + 1);
      for (std::size_t q = p + 1; q < end; ++q) {
        if (ids[q] == kOutOfVocab) continue;
        const std::uint64_t weight = scale / (q - p);
        counts[pair_key(ids[p], ids[q])] += weight;
        counts[pair_key(ids[q], ids[p])] += weight;
      }
    }
  }
}

}  // namespace

CoocMatrix::CoocMatrix(std::uint64_t vocab_size, std::vector<CoocEntry> entries,
                       int window)
    : vocab_size_(vocab_size), entries_(std::move(entries)), window_(window) {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const auto& e = entries_[k];
    if (e.target >= vocab_size_ || e.context >= vocab_size_) {
      throw FormatError("co-occurrence entry " + std::to_string(k) +
                        " has an id outside the vocabulary");
    }
    if (!(e.count > 0.0) || !std::isfinite(e.count)) {
      throw FormatError("co-occurrence entry " + std::to_string(k) +
                        " has a non-positive or non-finite count");
    }
    if (k > 0) {
      const auto& prev = entries_[k - 1];
      if (std::tie(prev.target, prev.context) >= std::tie(e.target, e.context)) {
        throw FormatError("co-occurrence entries are not sorted and unique");
      }
    }
  }
}

double CoocMatrix::at(WordId target, WordId context) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), std::make_pair(target, context),
      [](const CoocEntry& e, const std::pair<WordId, WordId>& key) {
        return std::tie(e.target, e.context) < std::tie(key.first, key.second);
      });
  if (it == entries_.end() || it->target != target || it->context != context) {
    return 0.0;
  }
  return it->count;
}

double CoocMatrix::total_mass() const {
  double sum = 0.0;
  for (const auto& e : entries_) sum += e.count;
  return sum;
}

CoocMatrix build_cooccurrence(std::span<const std::string> lines,
                              const Vocabulary& vocab, int window,
                              int threads) {
  if (window < 1 || window > kMaxWindow) {
    throw std::invalid_argument("window must be in [1, " +
                                std::to_string(kMaxWindow) + "]");
  }
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  const std::uint64_t scale = window_scale(window);

  const std::size_t shards =
      std::max<std::size_t>(1, std::min<std::size_t>(threads, lines.size()));
  std::vector<ScaledCounts> partial(shards);
  auto shard_span = [&](std::size_t s) {
    const std::size_t begin = lines.size() * s / shards;
    const std::size_t end = lines.size() * (s + 1) / shards;
    return lines.subspan(begin, end - begin);
  };
  if (shards == 1) {
    count_lines(lines, vocab, window, scale, partial[0]);
  } else {
    std::vector<std::jthread> workers;
    for (std::size_t s = 0; s < shards; ++s) {
      workers.emplace_back([&, s] {
        count_lines(shard_span(s), vocab, window, scale, partial[s]);
      });
    }
  }

  // Integer merge is exact, so shard order does not matter.
  ScaledCounts& merged = partial[0];
  for (std::size_t s = 1; s < shards; ++s) {
    for (const auto& [key, value] : partial[s]) merged[key] += value;
    partial[s] = {};
  }

  std::vector<CoocEntry> entries;
  entries.reserve(merged.size());
  const double denom = static_cast<double>(scale);
  for (const auto& [key, value] : merged) {
    entries.push_back({static_cast<WordId>(key >> 32),
                       static_cast<WordId>(key & 0xffffffffu),
                       static_cast<double>(value) / denom});
  }
  std::sort(entries.begin(), entries.end(),
            [](const CoocEntry& a, const CoocEntry& b) {
              return std::tie(a.target, a.context) <
                     std::tie(b.target, b.context);
            });
  return CoocMatrix(vocab.size(), std::move(entries), window);
}

CoocMatrix build_cooccurrence(std::istream& corpus, const Vocabulary& vocab,
                              int window, int threads) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(corpus, line)) lines.push_back(std::move(line));
  return build_cooccurrence(lines, vocab, window, threads);
}

void save_cooc(const CoocMatrix& matrix, std::ostream& out) {
  detail::write_magic(out, kCoocMagic);
  detail::write_u32(out, kCoocFormatVersion);
  detail::write_u64(out, matrix.vocab_size());
  detail::write_u64(out, matrix.nnz());
  for (const auto& e : matrix.entries()) {
    detail::write_u32(out, e.target);
    detail::write_u32(out, e.context);
    detail::write_f64(out, e.count);
  }
}

void save_cooc(const CoocMatrix& matrix, const std::filesystem::path& path) {
  auto out = detail::open_output(path, true);
  save_cooc(matrix, out);
  detail::check_written(out, path);
}

CoocMatrix load_cooc(std::istream& in) {
  detail::expect_magic(in, kCoocMagic, "co-occurrence");
  std::uint32_t version = 0;
  std::uint64_t vocab_size = 0, nnz = 0;
  if (!detail::read_u32(in, version) || !detail::read_u64(in, vocab_size) ||
      !detail::read_u64(in, nnz)) {
    throw TruncatedRecordError("co-occurrence header is truncated");
  }
  if (version != kCoocFormatVersion) {
    throw VersionMismatchError("co-occurrence format version " +
                               std::to_string(version) + ", expected " +
                               std::to_string(kCoocFormatVersion));
  }
  std::vector<CoocEntry> entries;
  entries.reserve(std::min<std::uint64_t>(nnz, 1u << 24));
  for (std::uint64_t k = 0; k < nnz; ++k) {
    CoocEntry e;
    if (!detail::read_u32(in, e.target) || !detail::read_u32(in, e.context) ||
        !detail::read_f64(in, e.count)) {
      throw TruncatedRecordError("co-occurrence record " + std::to_string(k) +
                                 " of " + std::to_string(nnz) +
                                 " is truncated");
    }
    entries.push_back(e);
  }
  if (!detail::at_eof(in)) {
    throw FormatError("trailing bytes after " + std::to_string(nnz) +
                      " co-occurrence records");
  }
  return CoocMatrix(vocab_size, std::move(entries));
}

CoocMatrix load_cooc(const std::filesystem::path& path) {
  auto in = detail::open_input(path, true);
  return load_cooc(in);
}

}  // namespace jointvec
