#include "rglab/core/types.hpp"

#include <stdexcept>

namespace rglab {

bool operator==(const Observation& a, const Observation& b) {
  return a.box == b.box && a.human == b.human && a.env_id == b.env_id;
}

Transition Transition::make(Observation state, int action, double intrinsic, int shift,
                            double scale, Observation next_state, bool done) {
  if (shift < -1 || shift > 1) {
    throw std::invalid_argument("Transition::make: shift outside {-1, 0, +1}");
  }
  Transition t;
  t.state = std::move(state);
  t.action = action;
  t.intrinsic_reward = intrinsic;
  t.shift = shift;
  t.reward = shift == 0 ? intrinsic : intrinsic + shift * scale;
  t.next_state = std::move(next_state);
  t.done = done;
  return t;
}

bool operator==(const Transition& a, const Transition& b) {
  return a.state == b.state && a.action == b.action && a.reward == b.reward &&
         a.intrinsic_reward == b.intrinsic_reward && a.shift == b.shift &&
         a.next_state == b.next_state && a.done == b.done;
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kOracleRule: return "oracle";
    case Provenance::kLlmText: return "llm";
    case Provenance::kParseFailure: return "parse-failure";
    case Provenance::kCacheHit: return "cache-hit";
  }
  return "unknown";
}

}  // namespace rglab
