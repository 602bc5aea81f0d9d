#include "jointvec/app.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "jointvec/analogy.h"
#include "jointvec/cooccurrence.h"
#include "jointvec/embeddings.h"
#include "jointvec/error.h"
#include "jointvec/model.h"
#include "jointvec/random.h"
#include "jointvec/relations.h"
#include "jointvec/similarity.h"
#include "jointvec/trainer.h"
#include "jointvec/vocabulary.h"

#ifndef JOINTVEC_VERSION
#define JOINTVEC_VERSION "dev"
#endif

namespace jointvec::app {

namespace {

namespace fs = std::filesystem;

// Sweep subsampling draws from its own stream so it never perturbs the
// training initialisation for the same seed.
constexpr std::uint64_t kSubsampleStream = 0x9e3779b97f4a7c15ull;

struct HelpRequested {
  std::string text;
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("manifest key '" + key + "' has bad value '" + text + "'");
  }
  return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw UsageError("manifest key '" + key + "' has bad value '" + text + "'");
}

struct PathField {
  const char* key;
  fs::path RunConfig::*member;
  bool input;
};

constexpr PathField kPathFields[] = {
    {"corpus", &RunConfig::corpus, true},
    {"vocab", &RunConfig::vocab, true},
    {"cooc", &RunConfig::cooc, true},
    {"model", &RunConfig::model, true},
    {"relations", &RunConfig::relations, true},
    {"embeddings", &RunConfig::embeddings, true},
    {"dataset", &RunConfig::dataset, true},
    {"output", &RunConfig::output, false},
    {"diagnostics", &RunConfig::diagnostics, false},
};

// Writes through a temporary file so a failing command leaves no partial
// output behind.
void commit_file(const fs::path& path,
                 const std::function<void(const fs::path&)>& write) {
  fs::path tmp = path;
  tmp += ".tmp";
  try {
    write(tmp);
    fs::rename(tmp, path);
  } catch (...) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw;
  }
}

void commit_stream(const fs::path& path,
                   const std::function<void(std::ostream&)>& write) {
  commit_file(path, [&](const fs::path& tmp) {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    write(out);
    if (!out.flush()) throw IoError("write failed: " + tmp.string());
  });
}

void emit(const RunConfig& config, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  if (config.output.empty()) {
    write(out);
  } else {
    commit_stream(config.output, write);
  }
}

RelationSet relations_for(const RunConfig& config, const Vocabulary& vocab) {
  if (config.relations.empty()) return {};
  return load_relations(config.relations, config.relation, vocab,
                        config.symmetric);
}

void write_epoch(std::ostream& out, const EpochStats& stats) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%d\t%.10g\t%.10g\t%.10g\n", stats.epoch,
                stats.objective.total, stats.objective.corpus,
                stats.objective.lexicon);
  out << buf << std::flush;
}

void run_train(const RunConfig& config, std::ostream& out) {
  const CoocMatrix cooc = load_cooc(config.cooc);
  RelationSet rel;
  if (!config.relations.empty()) {
    const Vocabulary vocab = load_vocab(config.vocab);
    if (vocab.size() != cooc.vocab_size()) {
      throw Error("vocabulary has " + std::to_string(vocab.size()) +
                  " words but the co-occurrence matrix was built for " +
                  std::to_string(cooc.vocab_size()));
    }
    rel = relations_for(config, vocab);
    std::clog << "relations: " << rel.size() << " pairs of '" << rel.name()
              << "', " << rel.skipped_pairs() << " skipped\n";
  }

  auto train_with = [&](std::ostream& diag) {
    TrainOptions options;
    options.on_epoch = [&](const EpochStats& stats) { write_epoch(diag, stats); };
    const Model model = train(cooc, rel, config.hp, options);
    commit_file(config.output, [&](const fs::path& tmp) {
      save_model(model, tmp, config.with_accumulators);
    });
  };
  if (config.diagnostics.empty()) {
    train_with(out);
  } else {
    commit_stream(config.diagnostics, train_with);
  }
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {
      "vocab", "cooc", "train", "export", "eval-sim", "eval-analogy", "sweep"};
  return names;
}

Manifest to_manifest(const RunConfig& config) {
  Manifest m;
  m["command"] = config.command;
  m["version"] = JOINTVEC_VERSION;
  for (const auto& field : kPathFields) {
    const fs::path& path = config.*(field.member);
    m[field.key] = path.string();
    if (field.input && !path.empty() && fs::is_regular_file(path)) {
      m[std::string("checksum.") + field.key] = file_checksum(path);
    }
  }
  m["relation"] = config.relation;
  m["symmetric"] = config.symmetric ? "true" : "false";
  m["with-accumulators"] = config.with_accumulators ? "true" : "false";
  m["reg-schedule"] = std::string(to_string(config.hp.schedule));
  m["window"] = std::to_string(config.window);
  m["min-count"] = std::to_string(config.min_count);
  m["dim"] = std::to_string(config.hp.dim);
  m["alpha"] = format_double(config.hp.alpha);
  m["tmax"] = format_double(config.hp.t_max);
  m["lr"] = format_double(config.hp.lr0);
  m["epochs"] = std::to_string(config.hp.epochs);
  m["lambda"] = format_double(config.hp.lambda);
  m["seed"] = std::to_string(config.hp.seed);
  m["threads"] = std::to_string(config.hp.threads);
  m["adagrad-eps"] = format_double(config.hp.adagrad_eps);
  m["axis"] = config.axis;
  std::string values;
  for (std::size_t k = 0; k < config.values.size(); ++k) {
    if (k > 0) values += ',';
    values += format_double(config.values[k]);
  }
  m["values"] = values;
  return m;
}

void apply_manifest(const Manifest& manifest, RunConfig& config) {
  for (const auto& [key, value] : manifest) {
    if (key == "version" || key.starts_with("checksum.")) continue;
    auto path_field = std::find_if(
        std::begin(kPathFields), std::end(kPathFields),
        [&](const PathField& f) { return key == f.key; });
    if (path_field != std::end(kPathFields)) {
      config.*(path_field->member) = value;
    } else if (key == "command") {
      config.command = value;
    } else if (key == "relation") {
      config.relation = value;
    } else if (key == "symmetric") {
      config.symmetric = parse_bool(key, value);
    } else if (key == "with-accumulators") {
      config.with_accumulators = parse_bool(key, value);
    } else if (key == "reg-schedule") {
      try {
        config.hp.schedule = parse_reg_schedule(value);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    } else if (key == "window") {
      config.window = parse_number<int>(key, value);
    } else if (key == "min-count") {
      config.min_count = parse_number<std::uint64_t>(key, value);
    } else if (key == "dim") {
      config.hp.dim = parse_number<int>(key, value);
    } else if (key == "alpha") {
      config.hp.alpha = parse_number<double>(key, value);
    } else if (key == "tmax") {
      config.hp.t_max = parse_number<double>(key, value);
    } else if (key == "lr") {
      config.hp.lr0 = parse_number<double>(key, value);
    } else if (key == "epochs") {
      config.hp.epochs = parse_number<int>(key, value);
    } else if (key == "lambda") {
      config.hp.lambda = parse_number<double>(key, value);
    } else if (key == "seed") {
      config.hp.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "threads") {
      config.hp.threads = parse_number<int>(key, value);
    } else if (key == "adagrad-eps") {
      config.hp.adagrad_eps = parse_number<double>(key, value);
    } else if (key == "axis") {
      config.axis = value;
    } else if (key == "values") {
      config.values.clear();
      std::size_t start = 0;
      while (start < value.size()) {
        auto comma = value.find(',', start);
        if (comma == std::string::npos) comma = value.size();
        config.values.push_back(
            parse_number<double>(key, value.substr(start, comma - start)));
        start = comma + 1;
      }
    } else {
      throw UsageError("unknown manifest key '" + key + "'");
    }
  }
}

RunConfig parse_command_line(std::span<const std::string> args) {
  RunConfig config;

  // --config must be applied before the other flags so they can override it.
  for (std::size_t k = 0; k < args.size(); ++k) {
    std::optional<std::string> manifest_path;
    if (args[k] == "--config" && k + 1 < args.size()) {
      manifest_path = args[k + 1];
    } else if (args[k].starts_with("--config=")) {
      manifest_path = args[k].substr(9);
    }
    if (manifest_path) {
      if (!fs::is_regular_file(*manifest_path)) {
        throw UsageError("config manifest not found: " + *manifest_path);
      }
      apply_manifest(read_manifest(fs::path(*manifest_path)), config);
    }
  }

  CLI::App cli{"Joint corpus + lexicon word embedding toolkit", "jointvec"};
  std::string command = config.command;
  std::string schedule(to_string(config.hp.schedule));
  std::string config_path;
  std::string corpus = config.corpus.string(), vocab = config.vocab.string(),
              cooc = config.cooc.string(), model = config.model.string(),
              output = config.output.string(),
              relations = config.relations.string(),
              embeddings = config.embeddings.string(),
              dataset = config.dataset.string(),
              diagnostics = config.diagnostics.string();

  cli.add_option("command", command, "Pipeline stage")
      ->check(CLI::IsMember(commands()));
  cli.add_option("--config", config_path, "Seed flags from a run manifest");
  cli.add_option("--corpus", corpus, "Plain text corpus, one sentence per line");
  cli.add_option("--vocab", vocab, "Vocabulary file");
  cli.add_option("--cooc", cooc, "Binary co-occurrence file");
  cli.add_option("--model", model, "Binary model checkpoint");
  cli.add_option("--output", output, "Output path");
  cli.add_option("--relations", relations, "Relation pair file (TSV)");
  cli.add_option("--relation", config.relation, "Relation label to keep");
  cli.add_flag("--symmetric", config.symmetric,
               "Close the relation under pair reversal");
  cli.add_option("--reg-schedule", schedule, "Regularizer visit schedule")
      ->check(CLI::IsMember({"cooc-only", "union"}));
  cli.add_option("--window", config.window, "Context window (tokens per side)");
  cli.add_option("--min-count", config.min_count, "Vocabulary frequency cut");
  cli.add_option("--dim", config.hp.dim, "Embedding dimensionality");
  cli.add_option("--alpha", config.hp.alpha, "Weighting exponent");
  cli.add_option("--tmax", config.hp.t_max, "Weighting cap");
  cli.add_option("--lr", config.hp.lr0, "Initial AdaGrad learning rate");
  cli.add_option("--epochs", config.hp.epochs, "Training epochs");
  cli.add_option("--lambda", config.hp.lambda, "Lexicon regularization weight");
  cli.add_option("--seed", config.hp.seed, "Random seed");
  cli.add_option("--threads", config.hp.threads, "Worker threads");
  cli.add_option("--embeddings", embeddings, "Exported embedding text file");
  cli.add_option("--dataset", dataset, "Similarity or analogy dataset");
  cli.add_option("--diagnostics", diagnostics,
                 "Per-epoch objective TSV (default: stdout)");
  cli.add_flag("--with-accumulators", config.with_accumulators,
               "Append AdaGrad accumulators to the checkpoint");
  cli.add_option("--axis", config.axis, "Sweep axis")
      ->check(CLI::IsMember({"dim", "corpus-fraction", "lambda"}));
  cli.add_option("--values", config.values, "Comma-separated sweep values")
      ->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    cli.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{cli.help()};
  }

  config.command = command;
  config.hp.schedule = parse_reg_schedule(schedule);
  config.corpus = corpus;
  config.vocab = vocab;
  config.cooc = cooc;
  config.model = model;
  config.output = output;
  config.relations = relations;
  config.embeddings = embeddings;
  config.dataset = dataset;
  config.diagnostics = diagnostics;
  return config;
}

void validate(const RunConfig& config) {
  const auto& names = commands();
  if (std::find(names.begin(), names.end(), config.command) == names.end()) {
    throw UsageError("unknown or missing command '" + config.command + "'");
  }
  auto require = [&](const fs::path& path, const char* flag) {
    if (path.empty()) {
      throw UsageError(config.command + " requires " + flag);
    }
  };
  const std::string& c = config.command;
  if (c == "vocab") {
    require(config.corpus, "--corpus");
    require(config.output, "--output");
  } else if (c == "cooc") {
    require(config.corpus, "--corpus");
    require(config.vocab, "--vocab");
    require(config.output, "--output");
  } else if (c == "train") {
    require(config.cooc, "--cooc");
    require(config.output, "--output");
    if (!config.relations.empty()) require(config.vocab, "--vocab");
  } else if (c == "export") {
    require(config.model, "--model");
    require(config.vocab, "--vocab");
    require(config.output, "--output");
  } else if (c == "eval-sim" || c == "eval-analogy") {
    require(config.embeddings, "--embeddings");
    require(config.dataset, "--dataset");
  } else if (c == "sweep") {
    require(config.corpus, "--corpus");
    require(config.dataset, "--dataset");
    if (config.axis.empty()) throw UsageError("sweep requires --axis");
    if (config.values.empty()) throw UsageError("sweep requires --values");
  }

  if (config.symmetric && config.relations.empty()) {
    throw UsageError("--symmetric needs --relations");
  }
  if (!config.relation.empty() && config.relations.empty()) {
    throw UsageError("--relation needs --relations");
  }
  if (!config.relations.empty() && config.relation.empty()) {
    throw UsageError("--relations needs --relation NAME");
  }

  for (const auto& field : kPathFields) {
    const fs::path& path = config.*(field.member);
    if (path.empty()) continue;
    if (field.input) {
      if (!fs::is_regular_file(path)) {
        throw UsageError(std::string("--") + field.key +
                         ": no such file: " + path.string());
      }
    } else {
      const auto parent = path.parent_path();
      if (!parent.empty() && !fs::is_directory(parent)) {
        throw UsageError(std::string("--") + field.key +
                         ": directory does not exist: " + parent.string());
      }
      for (const auto& other : kPathFields) {
        const fs::path& in = config.*(other.member);
        if (other.input && !in.empty() && fs::exists(path) &&
            fs::equivalent(in, path)) {
          throw UsageError(std::string("--") + field.key +
                           " would overwrite input --" + other.key);
        }
      }
    }
  }

  if (config.window < 1 || config.window > kMaxWindow) {
    throw UsageError("--window must be in [1, " + std::to_string(kMaxWindow) +
                     "]");
  }
  if (config.min_count < 1) throw UsageError("--min-count must be >= 1");
  try {
    config.hp.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (c == "sweep") {
    for (double v : config.values) {
      if (config.axis == "dim" && (v < 1 || v != static_cast<int>(v))) {
        throw UsageError("dim sweep values must be positive integers");
      }
      if (config.axis == "corpus-fraction" && !(v > 0.0 && v <= 1.0)) {
        throw UsageError("corpus-fraction values must be in (0, 1]");
      }
      if (config.axis == "lambda" && !(v >= 0.0)) {
        throw UsageError("lambda values must be >= 0");
      }
    }
    if (config.axis != "dim" && config.axis != "corpus-fraction" &&
        config.axis != "lambda") {
      throw UsageError("unknown sweep axis '" + config.axis + "'");
    }
  }
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(std::move(line));
  return lines;
}

std::vector<std::string> subsample_lines(std::span<const std::string> lines,
                                         double fraction, std::uint64_t seed) {
  Rng rng(seed ^ kSubsampleStream);
  std::vector<std::string> kept;
  for (const auto& line : lines) {
    if (rng.uniform01() < fraction) kept.push_back(line);
  }
  return kept;
}

std::vector<SweepRow> sweep(const RunConfig& config) {
  const auto lines = read_lines(config.corpus);
  const auto dataset = load_similarity_dataset(config.dataset);

  struct Built {
    Vocabulary vocab;
    CoocMatrix cooc;
    RelationSet rel;
  };
  auto build = [&](std::span<const std::string> subset) {
    Built b;
    b.vocab = build_vocab(subset, config.min_count);
    b.cooc = build_cooccurrence(subset, b.vocab, config.window,
                                config.hp.threads);
    b.rel = relations_for(config, b.vocab);
    return b;
  };

  std::optional<Built> shared;
  if (config.axis != "corpus-fraction") shared = build(lines);

  std::vector<SweepRow> rows;
  for (double value : config.values) {
    Hyperparams hp = config.hp;
    std::optional<Built> local;
    if (config.axis == "dim") {
      hp.dim = static_cast<int>(value);
    } else if (config.axis == "lambda") {
      hp.lambda = value;
    } else {
      local = build(subsample_lines(lines, value, hp.seed));
    }
    const Built& b = local ? *local : *shared;
    const Model model = train(b.cooc, b.rel, hp);
    const auto report =
        eval_similarity(compose_embeddings(model, b.vocab), dataset);
    rows.push_back({value, *report.value});
  }
  return rows;
}

void run(const RunConfig& config, std::ostream& out) {
  const std::string& c = config.command;
  if (c == "vocab") {
    const auto vocab = build_vocab(read_lines(config.corpus), config.min_count);
    commit_file(config.output,
                [&](const fs::path& tmp) { save_vocab(vocab, tmp); });
  } else if (c == "cooc") {
    const auto vocab = load_vocab(config.vocab);
    const auto cooc = build_cooccurrence(read_lines(config.corpus), vocab,
                                         config.window, config.hp.threads);
    commit_file(config.output,
                [&](const fs::path& tmp) { save_cooc(cooc, tmp); });
  } else if (c == "train") {
    run_train(config, out);
  } else if (c == "export") {
    const auto table =
        compose_embeddings(load_model(config.model), load_vocab(config.vocab));
    commit_file(config.output,
                [&](const fs::path& tmp) { export_embeddings(table, tmp); });
  } else if (c == "eval-sim") {
    const auto table = parse_embeddings(config.embeddings);
    const auto report =
        eval_similarity(table, load_similarity_dataset(config.dataset));
    emit(config, out, [&](std::ostream& o) { write_report_row(report, o); });
  } else if (c == "eval-analogy") {
    const auto table = parse_embeddings(config.embeddings);
    const auto report =
        eval_analogy(table, load_analogy_dataset(config.dataset));
    emit(config, out, [&](std::ostream& o) {
      for (const auto& section : report.sections) write_report_row(section, o);
      write_report_row(report.total, o);
    });
  } else if (c == "sweep") {
    const auto rows = sweep(config);
    emit(config, out, [&](std::ostream& o) {
      char buf[64];
      for (const auto& row : rows) {
        std::snprintf(buf, sizeof(buf), "%g\t%.6f\n", row.value, row.metric);
        o << buf;
      }
    });
  }
}

int main_entry(std::span<const std::string> args, std::ostream& out,
               std::ostream& err) {
  RunConfig config;
  try {
    config = parse_command_line(args);
    validate(config);
  } catch (const HelpRequested& help) {
    out << help.text;
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  fs::path manifest_path;
  try {
    if (!config.output.empty()) {
      manifest_path = config.output;
      manifest_path += ".manifest";
      write_manifest(to_manifest(config), manifest_path);
    }
    run(config, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    if (!manifest_path.empty()) {
      std::error_code ignored;
      fs::remove(manifest_path, ignored);
    }
    return kExitModuleError;
  }
  return kExitOk;
}

}  // namespace jointvec::app
