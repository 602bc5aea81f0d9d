#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "jointvec/hyperparams.h"
#include "jointvec/manifest.h"

namespace jointvec::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitModuleError = 1;
inline constexpr int kExitUsage = 2;

// Bad flags, missing inputs, or contradictory options. Raised before any
// output is written.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;  // vocab, cooc, train, export, eval-sim, eval-analogy, sweep

  std::filesystem::path corpus;
  std::filesystem::path vocab;
  std::filesystem::path cooc;
  std::filesystem::path model;
  std::filesystem::path output;
  std::filesystem::path relations;
  std::filesystem::path embeddings;
  std::filesystem::path dataset;
  std::filesystem::path diagnostics;

  std::string relation;
  bool symmetric = false;
  bool with_accumulators = false;

  int window = 10;
  std::uint64_t min_count = 20;
  Hyperparams hp;

  std::string axis;  // sweep only: dim, corpus-fraction, lambda
  std::vector<double> values;
};

const std::vector<std::string>& commands();

// Parses argv (without the program name). `--config MANIFEST` seeds every
// field from a previous run's manifest before the remaining flags apply.
RunConfig parse_command_line(std::span<const std::string> args);

// Validates the combination of flags for config.command; throws UsageError.
void validate(const RunConfig& config);

Manifest to_manifest(const RunConfig& config);
void apply_manifest(const Manifest& manifest, RunConfig& config);

// Executes one validated command. Reports and diagnostics without an
// --output/--diagnostics path go to `out`. Module errors propagate as
// jointvec::Error.
void run(const RunConfig& config, std::ostream& out);

std::vector<std::string> read_lines(const std::filesystem::path& path);
// Keeps each line independently with probability `fraction` using a stream
// seeded from `seed`; fraction 1 keeps every line.
std::vector<std::string> subsample_lines(std::span<const std::string> lines,
                                         double fraction, std::uint64_t seed);

struct SweepRow {
  double value = 0.0;
  double metric = 0.0;
};

// One training run per value on the configured corpus, each scored by
// Spearman correlation on the --dataset similarity file.
std::vector<SweepRow> sweep(const RunConfig& config);

// Full CLI behaviour including exit codes; used by main() and by tests.
int main_entry(std::span<const std::string> args, std::ostream& out,
               std::ostream& err);

}  // namespace jointvec::app
