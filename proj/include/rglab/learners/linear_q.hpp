#pragma once

#include <iosfwd>
#include <vector>

#include "rglab/core/types.hpp"
#include "rglab/learners/config.hpp"
#include "rglab/learners/tile_coding.hpp"

namespace rglab::learners {

// Linear action-value function over a fixed tile-coded feature map. The
// gradient of Q(s,a) in the weights is the (sparse, binary) feature vector,
// so the semi-gradient TD(0) update adds alpha * delta to each active
// weight of the taken action.
class LinearQFunction {
 public:
  LinearQFunction(TileCoder coder, int action_count, double initial_value = 0.0);

  int action_count() const { return action_count_; }
  const TileCoder& coder() const { return coder_; }

  double value(const std::vector<double>& box, int action) const;
  double max_value(const std::vector<double>& box) const;
  // Ties broken by the lowest action index.
  int greedy_action(const std::vector<double>& box) const;

  void td_update(const Transition& t, const LearnerConfig& cfg);
  void td_batch_update(const std::vector<Transition>& batch, const LearnerConfig& cfg);

  std::vector<double>& weights(int action);
  const std::vector<double>& weights(int action) const;

  void save(std::ostream& out, std::uint64_t config_hash) const;
  static LinearQFunction load(std::istream& in, std::uint64_t expected_config_hash,
                              TileCoder coder);

  bool weights_equal(const LinearQFunction& other) const;

 private:
  double fallback_alpha() const;

  TileCoder coder_;
  int action_count_;
  std::vector<std::vector<double>> weights_;  // [action][feature]
};

}  // namespace rglab::learners
