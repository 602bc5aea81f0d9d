#include "jointvec/analogy.h"

#include <cmath>
#include <istream>
#include <set>
#include <sstream>

#include "binary_io.h"
#include "jointvec/error.h"
#include "jointvec/tokenizer.h"

namespace jointvec {

AnalogyDataset load_analogy_dataset(std::istream& in, const std::string& name) {
  AnalogyDataset ds;
  ds.name = name;
  std::set<std::string> labels;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line[0] == ':') {
      std::istringstream header(line.substr(1));
      std::string label;
      if (!(header >> label)) throw ParseError(name, lineno, "empty section label");
      if (!labels.insert(label).second) {
        throw ParseError(name, lineno, "duplicate section '" + label + "'");
      }
      ds.sections.push_back({label, {}});
      continue;
    }
    const auto tokens = tokenize_line(line);
    if (tokens.size() != 4) {
      throw ParseError(name, lineno, "expected 4 words");
    }
    if (ds.sections.empty()) {
      labels.insert("default");
      ds.sections.push_back({"default", {}});
    }
    ds.sections.back().questions.push_back(
        {tokens[0], tokens[1], tokens[2], tokens[3]});
  }
  return ds;
}

AnalogyDataset load_analogy_dataset(const std::filesystem::path& path) {
  auto in = detail::open_input(path, false);
  return load_analogy_dataset(in, path.stem().string());
}

AnalogySolver::AnalogySolver(const EmbeddingTable& table)
    : table_(table),
      normalized_(table.values().begin(), table.values().end()),
      usable_(table.size(), 1) {
  const std::size_t d = static_cast<std::size_t>(table.dim());
  for (std::size_t row = 0; row < table.size(); ++row) {
    double* v = normalized_.data() + row * d;
    double norm = 0.0;
    for (std::size_t k = 0; k < d; ++k) norm += v[k] * v[k];
    norm = std::sqrt(norm);
    if (norm == 0.0) {
      usable_[row] = 0;
      continue;
    }
    for (std::size_t k = 0; k < d; ++k) v[k] /= norm;
  }
}

std::size_t AnalogySolver::solve(std::size_t a, std::size_t b,
                                 std::size_t c) const {
  const std::size_t d = static_cast<std::size_t>(table_.dim());
  const auto va = table_.vector(a);
  const auto vb = table_.vector(b);
  const auto vc = table_.vector(c);
  std::vector<double> query(d);
  for (std::size_t k = 0; k < d; ++k) query[k] = vb[k] - va[k] + vc[k];

  // |query| is shared by every candidate, so the dot product against the
  // normalised row orders candidates exactly as the cosine does.
  std::size_t best = table_.size();
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t row = 0; row < table_.size(); ++row) {
    if (row == a || row == b || row == c || !usable_[row]) continue;
    const double* v = normalized_.data() + row * d;
    double score = 0.0;
    for (std::size_t k = 0; k < d; ++k) score += v[k] * query[k];
    if (score > best_score || best == table_.size()) {
      best = row;
      best_score = score;
    }
  }
  if (best == table_.size()) {
    throw InsufficientCoverageError("no candidate rows besides the query");
  }
  return best;
}

std::optional<std::string> AnalogySolver::solve(std::string_view a,
                                                std::string_view b,
                                                std::string_view c) const {
  const auto ia = table_.find(a);
  const auto ib = table_.find(b);
  const auto ic = table_.find(c);
  if (!ia || !ib || !ic) return std::nullopt;
  return table_.word(solve(*ia, *ib, *ic));
}

std::optional<std::string> solve_analogy(const EmbeddingTable& table,
                                         std::string_view a, std::string_view b,
                                         std::string_view c) {
  return AnalogySolver(table).solve(a, b, c);
}

AnalogyReport eval_analogy(const EmbeddingTable& table,
                           const AnalogyDataset& dataset) {
  AnalogySolver solver(table);
  AnalogyReport report;
  report.total.dataset = dataset.name;
  report.total.metric = "accuracy";
  std::size_t total_correct = 0;
  for (const auto& section : dataset.sections) {
    EvalReport sec;
    sec.dataset = dataset.name + "/" + section.label;
    sec.metric = "accuracy";
    sec.n_total = section.questions.size();
    std::size_t correct = 0;
    for (const auto& q : section.questions) {
      std::optional<std::size_t> rows[4];
      bool scored = true;
      for (int k = 0; k < 4; ++k) {
        rows[k] = table.find(q[k]);
        scored &= rows[k].has_value();
      }
      if (!scored) continue;
      ++sec.n_scored;
      if (solver.solve(*rows[0], *rows[1], *rows[2]) == *rows[3]) ++correct;
    }
    if (sec.n_scored > 0) {
      sec.value = static_cast<double>(correct) / sec.n_scored;
    }
    report.total.n_total += sec.n_total;
    report.total.n_scored += sec.n_scored;
    total_correct += correct;
    report.sections.push_back(std::move(sec));
  }
  if (report.total.n_scored == 0) {
    throw InsufficientCoverageError(dataset.name +
                                    ": no question has all four words in "
                                    "vocabulary");
  }
  report.total.value =
      static_cast<double>(total_correct) / report.total.n_scored;
  return report;
}

}  // namespace jointvec
