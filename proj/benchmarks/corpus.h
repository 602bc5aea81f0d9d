#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace jointvec::bench {

// Zipf-like corpus over w0..w{vocab-1}, 12 tokens per line.
inline std::vector<std::string> zipf_lines(std::size_t tokens,
                                           std::size_t vocab) {
  std::vector<double> weights(vocab);
  for (std::size_t r = 0; r < vocab; ++r) weights[r] = 1.0 / (r + 1.0);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::mt19937_64 rng(42);
  std::vector<std::string> lines;
  std::string line;
  for (std::size_t t = 0; t < tokens; ++t) {
    if (!line.empty()) line += ' ';
    line += 'w' + std::to_string(pick(rng));
    if (t % 12 == 11) {
      lines.push_back(std::move(line));
      line.clear();
    }
  }
  if (!line.empty()) lines.push_back(std::move(line));
  return lines;
}

}  // namespace jointvec::bench
