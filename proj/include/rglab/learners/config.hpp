#pragma once

#include <cstdint>
#include <optional>

namespace rglab::learners {

// Exploration rate schedule: geometric interpolation from `start` down to
// `end` over the first `decay_steps` global steps, flat afterwards.
// decay_steps == 0 means "auto": the harness substitutes 20% of the run's
// planned step budget before training starts.
struct EpsilonSchedule {
  double start = 1.0;
  double end = 0.05;
  long decay_steps = 0;

  double value(long step) const;
};

struct LearnerConfig {
  double gamma = 0.99;
  // Step size; unset picks the conventional default for the algorithm
  // (0.1 tabular, 0.5 / num_tilings linear).
  std::optional<double> alpha;
  EpsilonSchedule epsilon;
  double q_init = 0.0;
  int batch_size = 32;
  std::size_t buffer_capacity = 10000;

  double alpha_or(double fallback) const { return alpha.value_or(fallback); }
};

}  // namespace rglab::learners
