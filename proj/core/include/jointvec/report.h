#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace jointvec {

struct EvalReport {
  std::string dataset;
  std::string metric;  // "spearman" or "accuracy"
  std::size_t n_total = 0;
  std::size_t n_scored = 0;
  // Empty when nothing was scored (analogy sections made of OOV questions).
  std::optional<double> value;
  // Fisher significance; similarity only, and only when defined.
  std::optional<double> z;
  std::optional<double> p;

  double coverage() const {
    return n_total == 0 ? 0.0 : static_cast<double>(n_scored) / n_total;
  }
};

// dataset<TAB>metric<TAB>value<TAB>n_scored<TAB>n_total<TAB>z<TAB>p
void write_report_row(const EvalReport& report, std::ostream& out);

}  // namespace jointvec
