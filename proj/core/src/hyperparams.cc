#include "jointvec/hyperparams.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jointvec {

std::string_view to_string(RegSchedule schedule) {
  return schedule == RegSchedule::kUnion ? "union" : "cooc-only";
}

RegSchedule parse_reg_schedule(std::string_view name) {
  if (name == "union") return RegSchedule::kUnion;
  if (name == "cooc-only") return RegSchedule::kCoocOnly;
  throw std::invalid_argument("unknown regularizer schedule '" +
                              std::string(name) + "'");
}

void Hyperparams::validate() const {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument(what);
  };
  if (dim <= 0) fail("dim must be > 0");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) fail("lambda must be >= 0");
  if (!(alpha > 0.0 && alpha <= 1.0)) fail("alpha must be in (0, 1]");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) fail("t_max must be > 0");
  if (!(lr0 > 0.0) || !std::isfinite(lr0)) fail("lr0 must be > 0");
  if (epochs < 1) fail("epochs must be >= 1");
  if (!(adagrad_eps > 0.0)) fail("adagrad_eps must be > 0");
  if (threads < 1) fail("threads must be >= 1");
}

}  // namespace jointvec
