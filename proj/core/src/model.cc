#include "jointvec/model.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include "binary_io.h"
#include "jointvec/error.h"
#include "jointvec/random.h"

namespace jointvec {

namespace {

constexpr std::string_view kModelMagic = "LXMD";

bool finite(std::span<const double> values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v); });
}

}  // namespace

Model::Model(std::size_t vocab_size, int dim)
    : vocab_size_(vocab_size), dim_(dim) {
  if (dim <= 0) throw std::invalid_argument("dim must be > 0");
  const std::size_t cells = vocab_size * static_cast<std::size_t>(dim);
  w_.assign(cells, 0.0);
  wt_.assign(cells, 0.0);
  gw_.assign(cells, 0.0);
  gwt_.assign(cells, 0.0);
  b_.assign(vocab_size, 0.0);
  bt_.assign(vocab_size, 0.0);
  gb_.assign(vocab_size, 0.0);
  gbt_.assign(vocab_size, 0.0);
}

Model Model::random(std::size_t vocab_size, int dim, Rng& rng) {
  Model model(vocab_size, dim);
  for (auto& v : model.w_) v = rng.uniform(-1.0, 1.0);
  for (auto& v : model.wt_) v = rng.uniform(-1.0, 1.0);
  return model;
}

bool Model::all_finite() const {
  return finite(w_) && finite(wt_) && finite(b_) && finite(bt_) &&
         finite(gw_) && finite(gwt_) && finite(gb_) && finite(gbt_);
}

void save_model(const Model& model, std::ostream& out,
                bool with_accumulators) {
  detail::write_magic(out, kModelMagic);
  detail::write_u32(out, kModelFormatVersion);
  detail::write_u64(out, model.vocab_size());
  detail::write_u64(out, static_cast<std::uint64_t>(model.dim()));
  auto write_all = [&](std::span<const double> values) {
    for (double v : values) detail::write_f64(out, v);
  };
  write_all(model.targets());
  write_all(model.contexts());
  write_all(model.target_biases());
  write_all(model.context_biases());
  if (with_accumulators) {
    write_all(model.target_accums());
    write_all(model.context_accums());
    write_all(model.target_bias_accums());
    write_all(model.context_bias_accums());
  }
}

void save_model(const Model& model, const std::filesystem::path& path,
                bool with_accumulators) {
  auto out = detail::open_output(path, true);
  save_model(model, out, with_accumulators);
  detail::check_written(out, path);
}

Model load_model(std::istream& in) {
  detail::expect_magic(in, kModelMagic, "model checkpoint");
  std::uint32_t version = 0;
  std::uint64_t vocab_size = 0, dim = 0;
  if (!detail::read_u32(in, version) || !detail::read_u64(in, vocab_size) ||
      !detail::read_u64(in, dim)) {
    throw TruncatedRecordError("model header is truncated");
  }
  if (version != kModelFormatVersion) {
    throw VersionMismatchError("model format version " +
                               std::to_string(version) + ", expected " +
                               std::to_string(kModelFormatVersion));
  }
  if (dim == 0 || dim > (1u << 20)) {
    throw FormatError("model header has implausible dim " +
                      std::to_string(dim));
  }
  Model model(vocab_size, static_cast<int>(dim));
  auto read_all = [&](std::span<double> values, const char* what) {
    for (auto& v : values) {
      if (!detail::read_f64(in, v)) {
        throw TruncatedRecordError(std::string("model array '") + what +
                                   "' is truncated");
      }
    }
  };
  read_all(model.targets(), "W");
  read_all(model.contexts(), "Wt");
  read_all(model.target_biases(), "b");
  read_all(model.context_biases(), "bt");
  if (!detail::at_eof(in)) {
    read_all(model.target_accums(), "G_W");
    read_all(model.context_accums(), "G_Wt");
    read_all(model.target_bias_accums(), "G_b");
    read_all(model.context_bias_accums(), "G_bt");
    if (!detail::at_eof(in)) {
      throw FormatError("trailing bytes after model accumulators");
    }
  }
  return model;
}

Model load_model(const std::filesystem::path& path) {
  auto in = detail::open_input(path, true);
  return load_model(in);
}

}  // namespace jointvec
