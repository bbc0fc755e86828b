#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rglab/core/rng.hpp"
#include "rglab/core/slate.hpp"
#include "rglab/core/types.hpp"

namespace rglab {

// Discrete-action environment contract. Instances are single-threaded;
// all randomness flows through the stream passed by the caller, so two
// instances driven by identically seeded streams evolve identically.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual const std::string& env_id() const = 0;
  virtual int action_count() const = 0;
  virtual int observation_arity() const = 0;

  // Samples a fresh initial state. Always valid to call.
  virtual Observation reset(RngStream& stream) = 0;

  // Advances the dynamics one step. Out-of-range actions are an argument
  // error; stepping a terminal episode is a state error.
  virtual StepResult step(int action, RngStream& stream) = 0;

  // Discretized key for tabular learners.
  virtual std::uint64_t state_key(const Observation& obs) const = 0;

  // Human-readable action label; may depend on the phase encoded in obs.
  virtual std::string action_name(const Observation& obs, int action) const = 0;

  // Short task description used as the default prompt card.
  virtual std::string task_card() const = 0;

  // Per-episode success indicator for threshold metrics, defined once the
  // episode is terminal. Environments without such a notion return nullopt.
  virtual std::optional<double> episode_success() const { return std::nullopt; }

  // Non-null for slate environments.
  virtual const SlateSpec* slate_spec() const { return nullptr; }
};

}  // namespace rglab
