#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "rglab/core/env.hpp"
#include "rglab/learners/config.hpp"
#include "rglab/learners/linear_q.hpp"
#include "rglab/learners/replay_buffer.hpp"
#include "rglab/learners/slateq.hpp"
#include "rglab/learners/updates.hpp"

namespace rglab::learners {

// Off-policy learner contract used by the training loop. select_action is
// the behavior policy (epsilon-greedy over the target policy's argmax);
// greedy_action is the target policy and never writes, so evaluation
// rollouts leave the value function untouched.
class Learner {
 public:
  virtual ~Learner() = default;

  virtual int action_count() const = 0;
  virtual int greedy_action(const Observation& obs) const = 0;

  // Epsilon-greedy behavior policy. Ties in the greedy branch go to the
  // lowest action index.
  int select_action(const Observation& obs, double epsilon, RngStream& stream) const;

  // Archives the transition and, once enough samples are buffered, applies
  // one batch update sampled with the same (policy) stream.
  virtual void observe(const Transition& t, RngStream& policy_stream) = 0;
  virtual void end_episode() {}

  virtual void save(std::ostream& out) const = 0;
  virtual void load(std::istream& in) = 0;
  virtual std::uint64_t config_hash() const = 0;
};

class TabularTDLearner : public Learner {
 public:
  TabularTDLearner(LearnerConfig cfg, int action_count, StateKeyFn key, std::string env_id);

  int action_count() const override { return table_.action_count(); }
  int greedy_action(const Observation& obs) const override;
  void observe(const Transition& t, RngStream& policy_stream) override;
  void save(std::ostream& out) const override;
  void load(std::istream& in) override;
  std::uint64_t config_hash() const override;

  QTable& table() { return table_; }
  const QTable& table() const { return table_; }

 private:
  LearnerConfig cfg_;
  StateKeyFn key_;
  std::string env_id_;
  QTable table_;
  ReplayBuffer buffer_;
};

// First-visit Monte Carlo over completed episodes. Episodes cut off by the
// step cap before termination are dropped: their returns are undefined.
class TabularMCLearner : public Learner {
 public:
  TabularMCLearner(LearnerConfig cfg, int action_count, StateKeyFn key, std::string env_id);

  int action_count() const override { return table_.action_count(); }
  int greedy_action(const Observation& obs) const override;
  void observe(const Transition& t, RngStream& policy_stream) override;
  void end_episode() override;
  void save(std::ostream& out) const override;
  void load(std::istream& in) override;
  std::uint64_t config_hash() const override;

  QTable& table() { return table_; }

 private:
  LearnerConfig cfg_;
  StateKeyFn key_;
  std::string env_id_;
  QTable table_;
  std::vector<Transition> episode_;
};

class LinearQLearner : public Learner {
 public:
  LinearQLearner(LearnerConfig cfg, TileCoder coder, int action_count, std::string env_id);

  int action_count() const override { return fn_.action_count(); }
  int greedy_action(const Observation& obs) const override;
  void observe(const Transition& t, RngStream& policy_stream) override;
  void save(std::ostream& out) const override;
  void load(std::istream& in) override;
  std::uint64_t config_hash() const override;

  LinearQFunction& function() { return fn_; }
  const LinearQFunction& function() const { return fn_; }

 private:
  LearnerConfig cfg_;
  std::string env_id_;
  LinearQFunction fn_;
  ReplayBuffer buffer_;
};

class SlateQLearner : public Learner {
 public:
  SlateQLearner(LearnerConfig cfg, SlateSpec spec, StateKeyFn key, std::string env_id);

  int action_count() const override { return fn_.spec().action_count(); }
  int greedy_action(const Observation& obs) const override;
  void observe(const Transition& t, RngStream& policy_stream) override;
  void save(std::ostream& out) const override;
  void load(std::istream& in) override;
  std::uint64_t config_hash() const override;

  SlateQFunction& function() { return fn_; }

 private:
  LearnerConfig cfg_;
  StateKeyFn key_;
  std::string env_id_;
  SlateQFunction fn_;
  ReplayBuffer buffer_;
};

struct LearnerSpec {
  std::string algo = "td";  // td | mc | linearq | slateq
  LearnerConfig config;
};

// Builds the learner for an environment. The environment must outlive the
// learner (tabular learners keep its state_key function). "linearq" is
// only available where a tile-coding layout is defined (cartpole);
// "slateq" requires a slate environment.
std::unique_ptr<Learner> make_learner(const LearnerSpec& spec, const Environment& env);

}  // namespace rglab::learners
