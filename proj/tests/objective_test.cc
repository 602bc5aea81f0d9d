#include "jointvec/objective.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "jointvec/error.h"
#include "jointvec/random.h"
#include "oracles.h"
#include "synthetic.h"

namespace jointvec {
namespace {

TEST(WeightF, CapAndZero) {
  EXPECT_EQ(weight_f(100.0, 0.75, 100.0), 1.0);
  EXPECT_EQ(weight_f(250.0, 0.75, 100.0), 1.0);
  EXPECT_EQ(weight_f(0.0, 0.75, 100.0), 0.0);
}

TEST(WeightF, HalfwayValue) {
  // (0.5)^0.75
  EXPECT_NEAR(weight_f(50.0, 0.75, 100.0), 0.5946035575013605, 1e-15);
}

TEST(WeightF, MonotoneAndBounded) {
  double prev = 0.0;
  for (double t = 0.0; t < 300.0; t += 0.37) {
    const double f = weight_f(t, 0.75, 100.0);
    EXPECT_GE(f, prev);
    EXPECT_LE(f, 1.0);
    prev = f;
  }
}

TEST(PairResidual, Examples) {
  Model model(2, 3);
  EXPECT_EQ(pair_residual(model, 0, 1, 1.0), 0.0);
  EXPECT_NEAR(pair_residual(model, 0, 1, std::exp(1.0)), -1.0, 1e-15);

  model.target(0)[0] = 2.0;
  model.context(1)[0] = 0.5;
  model.target_bias(0) = 0.25;
  model.context_bias(1) = -0.25;
  // dot = 1 = log(e)
  EXPECT_NEAR(pair_residual(model, 0, 1, std::exp(1.0)), 0.0, 1e-15);
}

TEST(ObjectiveTotal, LambdaZeroIsCorpusTerm) {
  auto inst = testing::random_gradient_instance(1);
  Hyperparams hp;
  hp.lambda = 0.0;
  const auto value = objective_total(inst.model, inst.cooc, inst.rel, hp);
  EXPECT_EQ(value.total, value.corpus);
}

TEST(ObjectiveTotal, EmptyRelationsGiveZeroLexiconTerm) {
  auto inst = testing::random_gradient_instance(2);
  Hyperparams hp;
  const auto value = objective_total(inst.model, inst.cooc, RelationSet{}, hp);
  EXPECT_EQ(value.lexicon, 0.0);
  EXPECT_EQ(value.total, value.corpus);
}

TEST(ObjectiveTotal, EqualVectorsContributeNothing) {
  Model model(2, 3);
  for (int k = 0; k < 3; ++k) model.target(0)[k] = model.context(1)[k] = k + 1.0;
  const RelationSet rel("r", 2, {{0, 1}});
  const CoocMatrix cooc(2, {{0, 1, 1.0}});
  EXPECT_EQ(objective_total(model, cooc, rel, Hyperparams{}).lexicon, 0.0);
}

TEST(ObjectiveTotal, NonFiniteIsDivergence) {
  auto inst = testing::random_gradient_instance(3);
  inst.model.target(inst.cooc.entries()[0].target)[0] = NAN;
  EXPECT_THROW(objective_total(inst.model, inst.cooc, inst.rel, Hyperparams{}),
               TrainingDivergedError);
}

TEST(ComputeGradients, ZeroAtExactFit) {
  Model model(2, 2);
  model.target(0)[0] = 1.0;
  model.context(1)[0] = 1.0;  // dot = 1 = log(e)
  Hyperparams hp;
  const RelationSet none("r", 2, {});
  const auto g = compute_gradients(model, 0, 1, std::exp(1.0), none, hp);
  for (double v : g.target) EXPECT_NEAR(v, 0.0, 1e-15);
  for (double v : g.context) EXPECT_NEAR(v, 0.0, 1e-15);
  EXPECT_NEAR(g.target_bias, 0.0, 1e-15);
  EXPECT_NEAR(g.context_bias, 0.0, 1e-15);

  // Related, and w_0 = w~_1: the lexicon pull vanishes too.
  const RelationSet related("r", 2, {{0, 1}});
  const auto h = compute_gradients(model, 0, 1, std::exp(1.0), related, hp);
  for (double v : h.target) EXPECT_NEAR(v, 0.0, 1e-12);
  for (double v : h.context) EXPECT_NEAR(v, 0.0, 1e-12);
}

TEST(ComputeGradients, LambdaZeroIsPlainGlove) {
  auto inst = testing::random_gradient_instance(4);
  Hyperparams hp;
  hp.lambda = 0.0;
  const RelationSet all_related = [&] {
    std::vector<WordPair> pairs;
    for (const auto& e : inst.cooc.entries()) pairs.emplace_back(e.target, e.context);
    return RelationSet("r", 10, pairs);
  }();
  for (const auto& e : inst.cooc.entries()) {
    const auto with = compute_gradients(inst.model, e.target, e.context, e.count,
                                        all_related, hp);
    const auto without = compute_gradients(inst.model, e.target, e.context,
                                           e.count, RelationSet{}, hp);
    EXPECT_EQ(with.target, without.target);
    EXPECT_EQ(with.context, without.context);
  }
}

TEST(FullGradient, MatchesFiniteDifferences) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = testing::random_gradient_instance(100 + seed);
    for (double lambda : {0.0, 1.0, 1e4}) {
      Hyperparams hp;
      hp.lambda = lambda;
      const Model analytic = full_gradient(inst.model, inst.cooc, inst.rel, hp);
      const Model numeric = testing::finite_difference_gradient(
          inst.model, inst.cooc, inst.rel, hp, 1e-6);
      auto check = [&](std::span<const double> a, std::span<const double> n) {
        for (std::size_t k = 0; k < a.size(); ++k) {
          const double scale = std::max({1.0, std::abs(a[k]), std::abs(n[k])});
          ASSERT_LT(std::abs(a[k] - n[k]) / scale, 1e-5)
              << "seed " << seed << " lambda " << lambda << " k " << k;
        }
      };
      check(analytic.targets(), numeric.targets());
      check(analytic.contexts(), numeric.contexts());
      check(analytic.target_biases(), numeric.target_biases());
      check(analytic.context_biases(), numeric.context_biases());
    }
  }
}

TEST(AdagradStep, ZeroGradientIsNoOp) {
  std::vector<double> p{1.5, -2.0}, acc{0.3, 0.0}, g{0.0, 0.0};
  adagrad_step(p, acc, g, 0.01, 1e-8);
  EXPECT_EQ(p, (std::vector<double>{1.5, -2.0}));
  EXPECT_EQ(acc, (std::vector<double>{0.3, 0.0}));
}

TEST(AdagradStep, FirstStepIsLearningRate) {
  double p = 0.0, acc = 0.0;
  adagrad_step(p, acc, -3.0, 0.01, 1e-12);
  EXPECT_NEAR(p, 0.01, 1e-12);
  EXPECT_EQ(acc, 9.0);
}

TEST(AdagradStep, SecondIdenticalStepShrinksBySqrtTwo) {
  double p = 0.0, acc = 0.0;
  adagrad_step(p, acc, 0.7, 0.01, 1e-12);
  const double first = p;
  adagrad_step(p, acc, 0.7, 0.01, 1e-12);
  EXPECT_NEAR(p - first, -0.01 / std::sqrt(2.0), 1e-12);
}

TEST(AdagradStep, ShapeMismatchThrows) {
  std::vector<double> p(2), acc(3), g(2);
  EXPECT_THROW(adagrad_step(p, acc, g, 0.01, 1e-8), std::invalid_argument);
}

}  // namespace
}  // namespace jointvec
