#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace jointvec {

// Which lexicon pairs receive regularizer updates. kCoocOnly touches only
// pairs that also have a stored co-occurrence; kUnion additionally visits
// relation-only edges.
enum class RegSchedule { kCoocOnly, kUnion };

std::string_view to_string(RegSchedule schedule);
// Throws std::invalid_argument on unknown names.
RegSchedule parse_reg_schedule(std::string_view name);

struct Hyperparams {
  int dim = 300;
  double lambda = 10000.0;
  double alpha = 0.75;
  double t_max = 100.0;
  double lr0 = 0.01;
  int epochs = 20;
  std::uint64_t seed = 1;
  double adagrad_eps = 1e-8;
  RegSchedule schedule = RegSchedule::kUnion;
  int threads = 1;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

}  // namespace jointvec
