#include <gtest/gtest.h>

#include <sstream>

#include "jointvec/error.h"
#include "jointvec/model.h"
#include "jointvec/random.h"

namespace jointvec {
namespace {

Model sample_model() {
  Rng rng(8);
  Model m = Model::random(5, 3, rng);
  for (WordId i = 0; i < 5; ++i) {
    m.target_bias(i) = rng.uniform(-2, 2);
    m.context_bias(i) = rng.uniform(-2, 2);
    m.target_bias_accum(i) = rng.uniform(0, 1);
    m.context_bias_accum(i) = rng.uniform(0, 1);
  }
  for (auto& v : m.target_accums()) v = rng.uniform(0, 3);
  for (auto& v : m.context_accums()) v = rng.uniform(0, 3);
  return m;
}

TEST(ModelCheckpoint, RoundTripWithAccumulators) {
  const Model m = sample_model();
  std::stringstream buf;
  save_model(m, buf, true);
  EXPECT_EQ(buf.str().size(), 4u + 4 + 8 + 8 + 8 * 2 * (15 + 15 + 5 + 5));
  EXPECT_EQ(load_model(buf), m);
}

TEST(ModelCheckpoint, AccumulatorsAreOptional) {
  const Model m = sample_model();
  std::stringstream buf;
  save_model(m, buf, false);
  const Model loaded = load_model(buf);
  EXPECT_TRUE(std::equal(m.targets().begin(), m.targets().end(),
                         loaded.targets().begin()));
  EXPECT_TRUE(std::equal(m.context_biases().begin(), m.context_biases().end(),
                         loaded.context_biases().begin()));
  for (double v : loaded.target_accums()) EXPECT_EQ(v, 0.0);
}

TEST(ModelCheckpoint, TruncationAndBadHeaders) {
  const Model m = sample_model();
  std::stringstream buf;
  save_model(m, buf, true);
  const std::string bytes = buf.str();

  std::istringstream cut(bytes.substr(0, bytes.size() - 8));
  EXPECT_THROW(load_model(cut), TruncatedRecordError);
  std::istringstream header_only(bytes.substr(0, 20));
  EXPECT_THROW(load_model(header_only), TruncatedRecordError);

  std::string versioned = bytes;
  versioned[4] = 2;
  std::istringstream wrong_version(versioned);
  EXPECT_THROW(load_model(wrong_version), VersionMismatchError);

  std::istringstream not_a_model("LXCO....");
  EXPECT_THROW(load_model(not_a_model), FormatError);
}

}  // namespace
}  // namespace jointvec
