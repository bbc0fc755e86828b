#pragma once

#include <functional>
#include <vector>

#include "rglab/core/types.hpp"
#include "rglab/learners/config.hpp"
#include "rglab/learners/qtable.hpp"

namespace rglab::learners {

using StateKeyFn = std::function<StateKey(const Observation&)>;

// One-step TD backup over a batch, in batch order:
//   Q(s,a) += alpha * (r + gamma * max_a' Q(s',a') * (1 - done) - Q(s,a))
// where r is the shaped reward stored in the transition.
void td_update(QTable& q, const std::vector<Transition>& batch, const LearnerConfig& cfg,
               const StateKeyFn& key);

// First-visit Monte Carlo: discounted returns G_t regressed into Q by
// running average per visit count. The episode must end terminal.
void mc_update(QTable& q, const std::vector<Transition>& episode, const LearnerConfig& cfg,
               const StateKeyFn& key);

}  // namespace rglab::learners
