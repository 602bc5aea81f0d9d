#include "jointvec/trainer.h"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "jointvec/error.h"
#include "jointvec/random.h"

namespace jointvec {

namespace {

// Parameter access for the single-threaded path.
struct PlainAccess {
  static double load(const double& x) { return x; }
  static void store(double& x, double v) { x = v; }
};

// Parameter access for lock-free parallel training. Relaxed atomics make the
// races well defined without imposing any ordering.
struct RelaxedAccess {
  static double load(const double& x) {
    return std::atomic_ref<double>(const_cast<double&>(x))
        .load(std::memory_order_relaxed);
  }
  static void store(double& x, double v) {
    std::atomic_ref<double>(x).store(v, std::memory_order_relaxed);
  }
};

struct Scratch {
  explicit Scratch(int dim) : wi(dim), wj(dim), gi(dim), gj(dim) {}
  std::vector<double> wi, wj, gi, gj;
};

template <typename Access>
bool adagrad_update(double& param, double& accum, double grad, double lr0,
                    double eps) {
  const double a = Access::load(accum) + grad * grad;
  Access::store(accum, a);
  const double p = Access::load(param) - lr0 * grad / (std::sqrt(a) + eps);
  Access::store(param, p);
  return std::isfinite(p);
}

// Returns false if any updated value is not finite.
template <typename Access>
bool apply_visit(Model& model, const Visit& v, const Hyperparams& hp,
                 Scratch& s) {
  const std::size_t d = static_cast<std::size_t>(model.dim());
  auto wi = model.target(v.target);
  auto wj = model.context(v.context);
  for (std::size_t k = 0; k < d; ++k) {
    s.wi[k] = Access::load(wi[k]);
    s.wj[k] = Access::load(wj[k]);
  }

  double c = 0.0;
  if (v.count > 0.0) {
    double dot = 0.0;
    for (std::size_t k = 0; k < d; ++k) dot += s.wi[k] * s.wj[k];
    const double r = dot + Access::load(model.target_bias(v.target)) +
                     Access::load(model.context_bias(v.context)) -
                     std::log(v.count);
    c = weight_f(v.count, hp.alpha, hp.t_max) * r;
  }
  for (std::size_t k = 0; k < d; ++k) {
    s.gi[k] = c * s.wj[k];
    s.gj[k] = c * s.wi[k];
  }
  if (v.related && hp.lambda != 0.0) {
    for (std::size_t k = 0; k < d; ++k) {
      const double pull = hp.lambda * (s.wi[k] - s.wj[k]);
      s.gi[k] += pull;
      s.gj[k] -= pull;
    }
  }

  bool ok = true;
  auto gwi = model.target_accum(v.target);
  for (std::size_t k = 0; k < d; ++k) {
    ok &= adagrad_update<Access>(wi[k], gwi[k], s.gi[k], hp.lr0,
                                 hp.adagrad_eps);
  }
  if (v.count > 0.0) {
    ok &= adagrad_update<Access>(model.target_bias(v.target),
                                 model.target_bias_accum(v.target), c, hp.lr0,
                                 hp.adagrad_eps);
  }
  auto gwj = model.context_accum(v.context);
  for (std::size_t k = 0; k < d; ++k) {
    ok &= adagrad_update<Access>(wj[k], gwj[k], s.gj[k], hp.lr0,
                                 hp.adagrad_eps);
  }
  if (v.count > 0.0) {
    ok &= adagrad_update<Access>(model.context_bias(v.context),
                                 model.context_bias_accum(v.context), c,
                                 hp.lr0, hp.adagrad_eps);
  }
  return ok;
}

[[noreturn]] void diverged(int epoch, const Visit& v) {
  throw TrainingDivergedError(
      "non-finite parameter in epoch " + std::to_string(epoch) +
      " at pair (" + std::to_string(v.target) + ", " +
      std::to_string(v.context) + "); try a smaller learning rate or lambda");
}

void run_parallel_epoch(Model& model, std::span<const Visit> visits,
                        const Hyperparams& hp, int epoch) {
  const std::size_t workers = static_cast<std::size_t>(hp.threads);
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  Visit failed_visit;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t begin = visits.size() * w / workers;
        const std::size_t end = visits.size() * (w + 1) / workers;
        Scratch scratch(model.dim());
        for (std::size_t k = begin; k < end; ++k) {
          if (failed.load(std::memory_order_relaxed)) return;
          if (!apply_visit<RelaxedAccess>(model, visits[k], hp, scratch)) {
            std::lock_guard lock(error_mutex);
            if (!failed.exchange(true)) failed_visit = visits[k];
            return;
          }
        }
      });
    }
  }
  if (failed) diverged(epoch, failed_visit);
}

}  // namespace

std::vector<Visit> build_visit_list(const CoocMatrix& cooc,
                                    const RelationSet& rel,
                                    const Hyperparams& hp) {
  std::vector<Visit> visits;
  visits.reserve(cooc.nnz());
  for (const auto& e : cooc.entries()) {
    visits.push_back(
        {e.target, e.context, e.count, rel.contains(e.target, e.context)});
  }
  // Relation-only edges carry only the lexicon term, which vanishes at
  // lambda = 0.
  if (hp.schedule == RegSchedule::kUnion && hp.lambda != 0.0) {
    for (const auto& [i, j] : rel.pairs()) {
      if (cooc.at(i, j) > 0.0) continue;
      visits.push_back({i, j, 0.0, true});
    }
  }
  return visits;
}

Model train(const CoocMatrix& cooc, const RelationSet& rel,
            const Hyperparams& hp, const TrainOptions& options) {
  hp.validate();
  if (cooc.empty()) throw Error("co-occurrence matrix is empty");
  if (!rel.empty() && rel.vocab_size() != cooc.vocab_size()) {
    throw std::invalid_argument(
        "relation set and co-occurrence matrix disagree on vocabulary size");
  }

  Rng rng(hp.seed);
  Model model;
  if (options.initial != nullptr) {
    if (options.initial->vocab_size() != cooc.vocab_size() ||
        options.initial->dim() != hp.dim) {
      throw std::invalid_argument("initial model shape does not match");
    }
    model = *options.initial;
  } else {
    model = Model::random(cooc.vocab_size(), hp.dim, rng);
  }

  std::vector<Visit> visits = build_visit_list(cooc, rel, hp);
  Scratch scratch(hp.dim);
  for (int epoch = 1; epoch <= hp.epochs; ++epoch) {
    rng.shuffle(std::span<Visit>(visits));
    if (hp.threads == 1) {
      for (const auto& v : visits) {
        if (!apply_visit<PlainAccess>(model, v, hp, scratch)) {
          diverged(epoch, v);
        }
        if (options.on_step) options.on_step(model);
      }
    } else {
      run_parallel_epoch(model, visits, hp, epoch);
    }
    if (options.on_epoch) {
      options.on_epoch(
          {epoch, objective_total(model, cooc, rel, hp), visits.size(), &model});
    }
  }
  return model;
}

}  // namespace jointvec
