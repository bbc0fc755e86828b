#pragma once

#include "rglab/core/slate.hpp"
#include "rglab/learners/config.hpp"
#include "rglab/learners/qtable.hpp"
#include "rglab/learners/updates.hpp"

namespace rglab::learners {

// Itemwise slate value function. Per-item values Q(s, i) are learned; a
// slate's value decomposes as sum_i P(i | slate) * Q(s, i) with the user
// choice probabilities as weights, and serving packs the top-m items by
// Q * choice-weight score.
class SlateQFunction {
 public:
  SlateQFunction(SlateSpec spec, double initial_value);

  const SlateSpec& spec() const { return spec_; }
  QTable& items() { return items_; }
  const QTable& items() const { return items_; }

  double slate_value(StateKey state, int action) const;
  int greedy_slate_action(StateKey state) const;

  // TD backup of the shaped slate reward into every item of the served
  // slate, each weighted by its within-slate choice probability.
  void itemwise_update(const Transition& t, const LearnerConfig& cfg, const StateKeyFn& key);
  void itemwise_batch_update(const std::vector<Transition>& batch, const LearnerConfig& cfg,
                             const StateKeyFn& key);

 private:
  SlateSpec spec_;
  QTable items_;
};

}  // namespace rglab::learners
