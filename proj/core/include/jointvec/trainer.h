#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "jointvec/cooccurrence.h"
#include "jointvec/hyperparams.h"
#include "jointvec/model.h"
#include "jointvec/objective.h"
#include "jointvec/relations.h"

namespace jointvec {

// One SGD update site. count == 0 marks a relation-only edge.
struct Visit {
  WordId target = 0;
  WordId context = 0;
  double count = 0.0;
  bool related = false;
};

// Every stored entry (with R(i, j) resolved), followed by relation-only edges
// when the schedule is kUnion and lambda > 0.
std::vector<Visit> build_visit_list(const CoocMatrix& cooc,
                                    const RelationSet& rel,
                                    const Hyperparams& hp);

struct EpochStats {
  int epoch = 0;  // 1-based
  ObjectiveValue objective;
  std::size_t visits = 0;
  // Parameters at the end of the epoch; valid only during the callback.
  const Model* model = nullptr;
};

using EpochCallback = std::function<void(const EpochStats&)>;

struct TrainOptions {
  EpochCallback on_epoch;
  // Called after every single visit; single-threaded only. Intended for
  // trajectory comparisons in tests.
  std::function<void(const Model&)> on_step;
  // Continue from this model instead of a fresh random one.
  const Model* initial = nullptr;
};

// Seeded initialisation, then hp.epochs passes over the visit list, shuffled
// per epoch. Each visit updates w_i, b_i, w~_j, b~_j in that order, all from
// gradients computed on the pre-update values. With hp.threads > 1 the
// shuffled list is split into contiguous chunks updated concurrently without
// locks.
Model train(const CoocMatrix& cooc, const RelationSet& rel,
            const Hyperparams& hp, const TrainOptions& options = {});

}  // namespace jointvec
