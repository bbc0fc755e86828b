#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rglab/envs/factory.hpp"
#include "rglab/guidance/factory.hpp"
#include "rglab/learners/learner.hpp"

namespace rglab::harness {

// Rolling-window success threshold, e.g. "profitable decisions in at least
// 90% of the last 100 episodes".
struct ThresholdSpec {
  bool enabled = false;
  double value = 0.9;
  int window = 100;
};

struct RunConfig {
  std::string name = "run";
  envs::EnvSpec env;
  learners::LearnerSpec learner;
  guidance::EvaluatorSpec evaluator;

  long episodes = 1000;    // N: total training episodes
  long max_steps = 500;    // M: step cap per episode
  std::vector<long> checkpoints = {100, 1000, 10000};  // global env steps
  int eval_episodes = 100;
  std::vector<std::uint64_t> seeds = {42, 43, 44, 45, 46};

  ThresholdSpec threshold;
  bool record_transitions = false;

  // Stop once every checkpoint has been evaluated and, when a threshold is
  // configured, the rolling metric has crossed it. Off runs all N episodes.
  bool stop_after_goals = true;

  void validate() const;  // throws std::invalid_argument listing violations
};

}  // namespace rglab::harness
