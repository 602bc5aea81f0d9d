#include "jointvec/embeddings.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "binary_io.h"
#include "jointvec/error.h"

namespace jointvec {

EmbeddingTable::EmbeddingTable(std::vector<std::string> words, int dim,
                               std::vector<double> vectors)
    : words_(std::move(words)), dim_(dim), values_(std::move(vectors)) {
  if (dim_ <= 0) throw std::invalid_argument("embedding dim must be > 0");
  if (values_.size() != words_.size() * static_cast<std::size_t>(dim_)) {
    throw std::invalid_argument("embedding values do not match |V| x dim");
  }
  index_.reserve(words_.size());
  for (std::size_t row = 0; row < words_.size(); ++row) {
    if (!index_.emplace(words_[row], row).second) {
      throw FormatError("duplicate embedding word '" + words_[row] + "'");
    }
  }
}

std::optional<std::size_t> EmbeddingTable::find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EmbeddingTable compose_embeddings(const Model& model, const Vocabulary& vocab) {
  if (model.vocab_size() != vocab.size()) {
    throw std::invalid_argument("model has " +
                                std::to_string(model.vocab_size()) +
                                " rows but the vocabulary has " +
                                std::to_string(vocab.size()) + " words");
  }
  std::vector<double> values(model.targets().size());
  const auto w = model.targets();
  const auto wt = model.contexts();
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = w[k] + wt[k];
  return EmbeddingTable(vocab.words(), model.dim(), std::move(values));
}

void export_embeddings(const EmbeddingTable& table, std::ostream& out) {
  out << table.size() << ' ' << table.dim() << '\n';
  char buf[32];
  std::string line;
  for (std::size_t row = 0; row < table.size(); ++row) {
    line = table.word(row);
    for (double v : table.vector(row)) {
      std::snprintf(buf, sizeof(buf), " %.6g", v);
      line += buf;
    }
    line += '\n';
    out << line;
  }
}

void export_embeddings(const EmbeddingTable& table,
                       const std::filesystem::path& path) {
  auto out = detail::open_output(path, false);
  export_embeddings(table, out);
  detail::check_written(out, path);
}

EmbeddingTable parse_embeddings(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) {
    throw FormatError(source + ": empty embedding file");
  }
  std::size_t rows = 0;
  int dim = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> rows >> dim) || (header >> extra) || dim <= 0) {
      throw ParseError(source, lineno, "missing '|V| d' header line");
    }
  }
  std::vector<std::string> words;
  std::vector<double> values;
  words.reserve(rows);
  values.reserve(rows * static_cast<std::size_t>(dim));
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto space = line.find(' ');
    if (space == std::string::npos || space == 0) {
      throw ParseError(source, lineno, "expected 'word v1 ... vd'");
    }
    words.push_back(line.substr(0, space));
    const char* p = line.data() + space;
    const char* end = line.data() + line.size();
    for (int k = 0; k < dim; ++k) {
      while (p < end && *p == ' ') ++p;
      double v = 0.0;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc() || !std::isfinite(v)) {
        throw ParseError(source, lineno,
                         "expected " + std::to_string(dim) + " finite values");
      }
      values.push_back(v);
      p = next;
    }
    while (p < end && *p == ' ') ++p;
    if (p != end) {
      throw ParseError(source, lineno,
                       "more than " + std::to_string(dim) + " values");
    }
  }
  if (words.size() != rows) {
    throw FormatError(source + ": header promises " + std::to_string(rows) +
                      " rows, found " + std::to_string(words.size()));
  }
  return EmbeddingTable(std::move(words), dim, std::move(values));
}

EmbeddingTable parse_embeddings(const std::filesystem::path& path) {
  auto in = detail::open_input(path, false);
  return parse_embeddings(in, path.string());
}

}  // namespace jointvec
