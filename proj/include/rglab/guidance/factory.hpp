#pragma once

#include <memory>
#include <string>

#include "rglab/guidance/cache.hpp"
#include "rglab/guidance/evaluator.hpp"
#include "rglab/llm/client.hpp"

namespace rglab::guidance {

struct EvaluatorSpec {
  EvaluatorKind kind = EvaluatorKind::kNull;
  double scale = 1.0;
  // Optional linear decay of the applied scale to zero over this many
  // global steps; 0 keeps the scale constant for the whole run.
  long scale_decay_steps = 0;
  bool cache_enabled = false;
  std::string cache_path;  // empty -> in-memory cache only
  llm::PromptSpec prompt;
  llm::EndpointConfig endpoint;

  double scale_at(long step) const {
    if (scale_decay_steps <= 0) return scale;
    if (step >= scale_decay_steps) return 0.0;
    return scale * (1.0 - static_cast<double>(step) / static_cast<double>(scale_decay_steps));
  }
};

// Builds the evaluator stack for a run: the null/scripted/llm core, wrapped
// in a verdict cache when enabled. For llm kind an HTTP transport is
// constructed from the endpoint config unless `transport` overrides it
// (tests and replays inject canned or recorded transports that way).
std::unique_ptr<Evaluator> make_evaluator(const EvaluatorSpec& spec, const Environment& env,
                                          llm::Transport* transport = nullptr);

}  // namespace rglab::guidance
