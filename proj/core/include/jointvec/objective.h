#pragma once

#include <span>
#include <vector>

#include "jointvec/cooccurrence.h"
#include "jointvec/hyperparams.h"
#include "jointvec/model.h"
#include "jointvec/relations.h"

namespace jointvec {

// Co-occurrence weighting: (t / t_max)^alpha below t_max, 1 at or above.
double weight_f(double t, double alpha, double t_max);

// w_i . w~_j + b_i + b~_j - log(x).
double pair_residual(const Model& model, WordId i, WordId j, double x);

struct ObjectiveValue {
  double total = 0.0;    // J = J_C + lambda * J_S
  double corpus = 0.0;   // J_C
  double lexicon = 0.0;  // J_S
};

// J_C sums f(X_ij) * residual^2 / 2 over stored entries; J_S sums
// |w_i - w~_j|^2 / 2 over relation pairs. Throws TrainingDivergedError if any
// component is not finite.
ObjectiveValue objective_total(const Model& model, const CoocMatrix& cooc,
                               const RelationSet& rel, const Hyperparams& hp);

struct PairGradients {
  std::vector<double> target;   // dJ/dw_i
  double target_bias = 0.0;     // dJ/db_i
  std::vector<double> context;  // dJ/dw~_j
  double context_bias = 0.0;    // dJ/db~_j
};

// Stochastic gradient contribution of one visit. `x` is the stored count, or
// 0 for a relation-only edge (which then carries no residual term);
// `related` is R(i, j).
void compute_gradients(const Model& model, WordId i, WordId j, double x,
                       bool related, const Hyperparams& hp,
                       PairGradients& out);
PairGradients compute_gradients(const Model& model, WordId i, WordId j,
                                double x, const RelationSet& rel,
                                const Hyperparams& hp);

// accum += grad^2; param -= lr0 * grad / (sqrt(accum) + eps), element-wise.
void adagrad_step(std::span<double> param, std::span<double> accum,
                  std::span<const double> grad, double lr0, double eps);
void adagrad_step(double& param, double& accum, double grad, double lr0,
                  double eps);

// Full gradient of J, assembled by summing per-visit contributions over the
// union schedule (every stored entry plus every relation-only edge). The
// returned Model holds the gradient in its parameter arrays; accumulators are
// zero.
Model full_gradient(const Model& model, const CoocMatrix& cooc,
                    const RelationSet& rel, const Hyperparams& hp);

}  // namespace jointvec
