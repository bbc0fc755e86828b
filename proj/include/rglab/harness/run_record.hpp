#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rglab/core/types.hpp"

namespace rglab::harness {

inline constexpr long kThresholdNotReached = -1;

struct CheckpointRecord {
  long step = 0;
  long episodes_completed = 0;
  double mean_return = 0.0;   // intrinsic, greedy evaluation
  double stddev_return = 0.0;
  int eval_episodes = 0;
  long evaluator_queries = 0;
  long evaluator_failures = 0;
  long cache_hits = 0;
  double wall_ms = 0.0;
};

// Everything one seeded training run produced. All reward fields hold
// intrinsic values; shaped rewards exist only inside stored transitions.
struct RunRecord {
  std::string run_name;
  std::string env_id;
  std::string evaluator_kind;
  std::string learner_algo;
  std::uint64_t seed = 0;
  double shift_scale = 1.0;
  long scale_decay_steps = 0;  // 0 = constant scale

  std::vector<CheckpointRecord> checkpoints;
  std::vector<double> episode_returns;   // intrinsic return per episode
  std::vector<long> episode_steps;
  std::vector<double> episode_success;   // empty when the env has no metric
  long episodes_to_threshold = kThresholdNotReached;
  bool threshold_configured = false;

  long total_steps = 0;
  long total_episodes = 0;
  double wall_ms = 0.0;

  // Populated only when RunConfig::record_transitions is set.
  std::vector<Transition> transitions;

  nlohmann::json to_json() const;
  static RunRecord from_json(const nlohmann::json& j);

  void write_events(std::ostream& out) const;  // line-delimited JSON

  // Equality of results: everything except wall-clock fields.
  bool same_results(const RunRecord& other) const;
};

// Consistency audit over a finished run: every stored transition satisfies
// reward == intrinsic + shift * scale bit-for-bit with shift in {-1,0,+1},
// recorded episode returns match the transitions' intrinsic sums, and no
// checkpoint statistic is non-finite. Returns a list of violations, empty
// when the record is clean.
std::vector<std::string> audit_run(const RunRecord& record);

}  // namespace rglab::harness
