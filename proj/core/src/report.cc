#include "jointvec/report.h"

#include <cstdio>
#include <ostream>

namespace jointvec {

void write_report_row(const EvalReport& report, std::ostream& out) {
  auto opt = [&](const std::optional<double>& v) {
    if (v) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6f", *v);
      out << buf;
    }
  };
  out << report.dataset << '\t' << report.metric << '\t';
  opt(report.value);
  out << '\t' << report.n_scored << '\t' << report.n_total << '\t';
  opt(report.z);
  out << '\t';
  opt(report.p);
  out << '\n';
}

}  // namespace jointvec
