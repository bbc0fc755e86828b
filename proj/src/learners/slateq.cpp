#include "rglab/learners/slateq.hpp"

#include <algorithm>
#include <stdexcept>

namespace rglab::learners {

SlateQFunction::SlateQFunction(SlateSpec spec, double initial_value)
    : spec_(std::move(spec)),
      items_(static_cast<int>(spec_.item_kaleness.size()), initial_value) {}

double SlateQFunction::slate_value(StateKey state, int action) const {
  const std::vector<int>& slate = spec_.slate_for(action);
  double weight_sum = 0.0;
  for (int item : slate) weight_sum += spec_.choice_weight(item);
  double value = 0.0;
  for (int item : slate) {
    value += spec_.choice_weight(item) / weight_sum * items_.value(state, item);
  }
  return value;
}

int SlateQFunction::greedy_slate_action(StateKey state) const {
  // Greedy packing of the choice-weighted slate value: grow the slate one
  // item at a time, always adding the item that maximizes the resulting
  // sum_i w_i Q_i / sum_i w_i. Ties go to the lowest item index.
  const int n = items_.action_count();
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  std::vector<int> picks;
  double weight_sum = 0.0, weighted_q = 0.0;
  for (int round = 0; round < spec_.slate_size; ++round) {
    int best = -1;
    double best_value = 0.0;
    for (int i = 0; i < n; ++i) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      const double w = spec_.choice_weight(i);
      const double value = (weighted_q + w * items_.value(state, i)) / (weight_sum + w);
      if (best < 0 || value > best_value) {
        best = i;
        best_value = value;
      }
    }
    taken[static_cast<std::size_t>(best)] = true;
    picks.push_back(best);
    weight_sum += spec_.choice_weight(best);
    weighted_q += spec_.choice_weight(best) * items_.value(state, best);
  }
  return spec_.action_for(std::move(picks));
}

void SlateQFunction::itemwise_update(const Transition& t, const LearnerConfig& cfg,
                                     const StateKeyFn& key) {
  const double alpha = cfg.alpha_or(0.1);
  const StateKey s = key(t.state);
  double bootstrap = 0.0;
  if (!t.done) {
    const StateKey next = key(t.next_state);
    bootstrap = cfg.gamma * slate_value(next, greedy_slate_action(next));
  }
  const double target = t.reward + bootstrap;

  const std::vector<int>& slate = spec_.slate_for(t.action);
  double weight_sum = 0.0;
  for (int item : slate) weight_sum += spec_.choice_weight(item);
  for (int item : slate) {
    const double choice_prob = spec_.choice_weight(item) / weight_sum;
    items_.nudge_towards(s, item, target, alpha * choice_prob);
  }
}

void SlateQFunction::itemwise_batch_update(const std::vector<Transition>& batch,
                                           const LearnerConfig& cfg, const StateKeyFn& key) {
  if (batch.empty()) throw std::invalid_argument("SlateQFunction: empty batch");
  for (const Transition& t : batch) itemwise_update(t, cfg, key);
}

}  // namespace rglab::learners
