#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "jointvec/vocabulary.h"

namespace jointvec {

class Rng;

// Target vectors, context vectors, both bias vectors, and the AdaGrad
// accumulators for each of them. Matrices are row-major |V| x dim.
class Model {
 public:
  Model() = default;
  // Everything zero.
  Model(std::size_t vocab_size, int dim);

  // Vectors uniform in [-1, 1], biases and accumulators zero.
  static Model random(std::size_t vocab_size, int dim, Rng& rng);

  std::size_t vocab_size() const { return vocab_size_; }
  int dim() const { return dim_; }

  std::span<double> target(WordId i) { return row(w_, i); }
  std::span<const double> target(WordId i) const { return row(w_, i); }
  std::span<double> context(WordId j) { return row(wt_, j); }
  std::span<const double> context(WordId j) const { return row(wt_, j); }
  double& target_bias(WordId i) { return b_[i]; }
  double target_bias(WordId i) const { return b_[i]; }
  double& context_bias(WordId j) { return bt_[j]; }
  double context_bias(WordId j) const { return bt_[j]; }

  std::span<double> target_accum(WordId i) { return row(gw_, i); }
  std::span<const double> target_accum(WordId i) const { return row(gw_, i); }
  std::span<double> context_accum(WordId j) { return row(gwt_, j); }
  std::span<const double> context_accum(WordId j) const {
    return row(gwt_, j);
  }
  double& target_bias_accum(WordId i) { return gb_[i]; }
  double target_bias_accum(WordId i) const { return gb_[i]; }
  double& context_bias_accum(WordId j) { return gbt_[j]; }
  double context_bias_accum(WordId j) const { return gbt_[j]; }

  // Whole-array views, in checkpoint order.
  std::span<double> targets() { return w_; }
  std::span<const double> targets() const { return w_; }
  std::span<double> contexts() { return wt_; }
  std::span<const double> contexts() const { return wt_; }
  std::span<double> target_biases() { return b_; }
  std::span<const double> target_biases() const { return b_; }
  std::span<double> context_biases() { return bt_; }
  std::span<const double> context_biases() const { return bt_; }
  std::span<double> target_accums() { return gw_; }
  std::span<const double> target_accums() const { return gw_; }
  std::span<double> context_accums() { return gwt_; }
  std::span<const double> context_accums() const { return gwt_; }
  std::span<double> target_bias_accums() { return gb_; }
  std::span<const double> target_bias_accums() const { return gb_; }
  std::span<double> context_bias_accums() { return gbt_; }
  std::span<const double> context_bias_accums() const { return gbt_; }

  bool all_finite() const;

  friend bool operator==(const Model&, const Model&) = default;

 private:
  std::span<double> row(std::vector<double>& v, WordId i) const {
    return {v.data() + std::size_t{i} * dim_, static_cast<std::size_t>(dim_)};
  }
  std::span<const double> row(const std::vector<double>& v, WordId i) const {
    return {v.data() + std::size_t{i} * dim_, static_cast<std::size_t>(dim_)};
  }

  std::size_t vocab_size_ = 0;
  int dim_ = 0;
  std::vector<double> w_, wt_, b_, bt_;
  std::vector<double> gw_, gwt_, gb_, gbt_;
};

// Binary little-endian: "LXMD", u32 version, u64 |V|, u64 dim, then W, Wt, b,
// bt as f64 arrays. Accumulators follow in the same order when requested;
// on load they are zero if absent.
inline constexpr std::uint32_t kModelFormatVersion = 1;

void save_model(const Model& model, std::ostream& out,
                bool with_accumulators = true);
void save_model(const Model& model, const std::filesystem::path& path,
                bool with_accumulators = true);
Model load_model(std::istream& in);
Model load_model(const std::filesystem::path& path);

}  // namespace jointvec
