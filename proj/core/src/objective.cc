#include "jointvec/objective.h"

#include <cmath>

#include "jointvec/error.h"

namespace jointvec {

double weight_f(double t, double alpha, double t_max) {
  if (t < t_max) return std::pow(t / t_max, alpha);
  return 1.0;
}

double pair_residual(const Model& model, WordId i, WordId j, double x) {
  const auto wi = model.target(i);
  const auto wj = model.context(j);
  double dot = 0.0;
  for (std::size_t k = 0; k < wi.size(); ++k) dot += wi[k] * wj[k];
  return dot + model.target_bias(i) + model.context_bias(j) - std::log(x);
}

ObjectiveValue objective_total(const Model& model, const CoocMatrix& cooc,
                               const RelationSet& rel, const Hyperparams& hp) {
  ObjectiveValue value;
  for (const auto& e : cooc.entries()) {
    const double r = pair_residual(model, e.target, e.context, e.count);
    value.corpus += weight_f(e.count, hp.alpha, hp.t_max) * r * r;
  }
  value.corpus *= 0.5;
  for (const auto& [i, j] : rel.pairs()) {
    const auto wi = model.target(i);
    const auto wj = model.context(j);
    double sq = 0.0;
    for (std::size_t k = 0; k < wi.size(); ++k) {
      const double diff = wi[k] - wj[k];
      sq += diff * diff;
    }
    value.lexicon += sq;
  }
  value.lexicon *= 0.5;
  value.total = value.corpus + hp.lambda * value.lexicon;
  if (!std::isfinite(value.total) || !std::isfinite(value.corpus) ||
      !std::isfinite(value.lexicon)) {
    throw TrainingDivergedError("objective is not finite (J_C=" +
                                std::to_string(value.corpus) + ", J_S=" +
                                std::to_string(value.lexicon) + ")");
  }
  return value;
}

void compute_gradients(const Model& model, WordId i, WordId j, double x,
                       bool related, const Hyperparams& hp,
                       PairGradients& out) {
  const auto wi = model.target(i);
  const auto wj = model.context(j);
  const std::size_t d = wi.size();
  out.target.resize(d);
  out.context.resize(d);
  double c = 0.0;
  if (x > 0.0) c = weight_f(x, hp.alpha, hp.t_max) * pair_residual(model, i, j, x);
  for (std::size_t k = 0; k < d; ++k) {
    out.target[k] = c * wj[k];
    out.context[k] = c * wi[k];
  }
  if (related && hp.lambda != 0.0) {
    for (std::size_t k = 0; k < d; ++k) {
      const double pull = hp.lambda * (wi[k] - wj[k]);
      out.target[k] += pull;
      out.context[k] -= pull;
    }
  }
  out.target_bias = c;
  out.context_bias = c;
}

PairGradients compute_gradients(const Model& model, WordId i, WordId j,
                                double x, const RelationSet& rel,
                                const Hyperparams& hp) {
  PairGradients out;
  compute_gradients(model, i, j, x, rel.contains(i, j), hp, out);
  return out;
}

void adagrad_step(std::span<double> param, std::span<double> accum,
                  std::span<const double> grad, double lr0, double eps) {
  if (param.size() != accum.size() || param.size() != grad.size()) {
    throw std::invalid_argument("adagrad_step: shape mismatch");
  }
  for (std::size_t k = 0; k < param.size(); ++k) {
    adagrad_step(param[k], accum[k], grad[k], lr0, eps);
  }
}

void adagrad_step(double& param, double& accum, double grad, double lr0,
                  double eps) {
  accum += grad * grad;
  param -= lr0 * grad / (std::sqrt(accum) + eps);
}

Model full_gradient(const Model& model, const CoocMatrix& cooc,
                    const RelationSet& rel, const Hyperparams& hp) {
  Model grad(model.vocab_size(), model.dim());
  PairGradients g;
  auto accumulate = [&](WordId i, WordId j) {
    auto gi = grad.target(i);
    auto gj = grad.context(j);
    for (std::size_t k = 0; k < gi.size(); ++k) {
      gi[k] += g.target[k];
      gj[k] += g.context[k];
    }
    grad.target_bias(i) += g.target_bias;
    grad.context_bias(j) += g.context_bias;
  };
  for (const auto& e : cooc.entries()) {
    compute_gradients(model, e.target, e.context, e.count,
                      rel.contains(e.target, e.context), hp, g);
    accumulate(e.target, e.context);
  }
  for (const auto& [i, j] : rel.pairs()) {
    if (cooc.at(i, j) > 0.0) continue;
    compute_gradients(model, i, j, 0.0, true, hp, g);
    accumulate(i, j);
  }
  return grad;
}

}  // namespace jointvec
