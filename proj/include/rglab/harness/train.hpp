#pragma once

#include <vector>

#include "rglab/harness/run_config.hpp"
#include "rglab/harness/run_record.hpp"

namespace rglab::harness {

// Frozen-weights greedy evaluation: epsilon = 0 rollouts with no learning.
// Returns the mean intrinsic episode return; stddev_out, when given,
// receives the population standard deviation across episodes.
double evaluate_policy(const learners::Learner& learner, Environment& env, int episodes,
                       long max_steps, RngStream& stream, double* stddev_out = nullptr);

// One seeded training run, with the evaluator built from the config.
RunRecord train_run(const RunConfig& cfg, std::uint64_t seed);

// Same loop with a caller-supplied evaluator (nullptr detaches the guidance
// layer entirely; every stored shift is then zero).
RunRecord train_run(const RunConfig& cfg, std::uint64_t seed, guidance::Evaluator* evaluator);

// All configured seeds, optionally in parallel worker threads. Results are
// ordered like cfg.seeds regardless of scheduling.
std::vector<RunRecord> train_all_seeds(const RunConfig& cfg, int jobs = 1);

// First episode index (1-based) at which the rolling mean of the success
// series over `window` episodes reaches `value`; kThresholdNotReached when
// it never does.
long episodes_to_threshold(const std::vector<double>& success, const ThresholdSpec& threshold);

// Per-checkpoint difference between guided and baseline mean intrinsic
// evaluation rewards, pooled over seeds, with per-seed deltas retained.
struct BoostRow {
  long step = 0;
  double baseline_mean = 0.0;
  double guided_mean = 0.0;
  double boost = 0.0;
  std::vector<double> per_seed_delta;
};

std::vector<BoostRow> boosted_reward(const std::vector<RunRecord>& guided,
                                     const std::vector<RunRecord>& baseline);

}  // namespace rglab::harness
