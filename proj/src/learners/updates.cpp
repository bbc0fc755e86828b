#include "rglab/learners/updates.hpp"

#include <stdexcept>
#include <unordered_set>

namespace rglab::learners {

void td_update(QTable& q, const std::vector<Transition>& batch, const LearnerConfig& cfg,
               const StateKeyFn& key) {
  if (batch.empty()) throw std::invalid_argument("td_update: empty batch");
  const double alpha = cfg.alpha_or(0.1);
  for (const Transition& t : batch) {
    const double bootstrap = t.done ? 0.0 : cfg.gamma * q.max_value(key(t.next_state));
    q.nudge_towards(key(t.state), t.action, t.reward + bootstrap, alpha);
  }
}

void mc_update(QTable& q, const std::vector<Transition>& episode, const LearnerConfig& cfg,
               const StateKeyFn& key) {
  if (episode.empty()) throw std::invalid_argument("mc_update: empty episode");
  if (!episode.back().done) throw std::logic_error("mc_update: episode not terminated");

  std::vector<double> returns(episode.size());
  double g = 0.0;
  for (std::size_t i = episode.size(); i-- > 0;) {
    g = episode[i].reward + cfg.gamma * g;
    returns[i] = g;
  }

  std::unordered_set<std::uint64_t> visited;
  for (std::size_t i = 0; i < episode.size(); ++i) {
    const StateKey s = key(episode[i].state);
    const std::uint64_t cell = s * 64 + static_cast<std::uint64_t>(episode[i].action);
    if (visited.insert(cell).second) q.average_in(s, episode[i].action, returns[i]);
  }
}

}  // namespace rglab::learners
