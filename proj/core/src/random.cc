#include "jointvec/random.h"

namespace jointvec {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection on the top of the range keeps every residue equally likely.
  const std::uint64_t limit = -bound % bound;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r < limit);
  return r % bound;
}

}  // namespace jointvec
