#pragma once

#include <string>
#include <vector>

namespace rglab {

// Dual-format environment state: the numeric "box" vector plus a textual
// rendering of the same data. The rendering is a pure function of the box,
// so equal boxes from the same environment produce byte-identical text.
struct Observation {
  std::vector<double> box;
  std::string human;
  std::string env_id;
};

bool operator==(const Observation& a, const Observation& b);

struct StepResult {
  Observation obs;
  double intrinsic_reward = 0.0;
  bool done = false;
};

// One experience tuple as archived in the replay buffer. `reward` is the
// shaped value the learner trains on; `intrinsic_reward` is the
// environment-native value that reports are built from.
struct Transition {
  Observation state;
  int action = 0;
  double reward = 0.0;
  double intrinsic_reward = 0.0;
  int shift = 0;  // in {-1, 0, +1}
  Observation next_state;
  bool done = false;

  // reward = intrinsic + shift * scale, with shift == 0 leaving the
  // intrinsic value bit-for-bit untouched.
  static Transition make(Observation state, int action, double intrinsic, int shift,
                         double scale, Observation next_state, bool done);
};

bool operator==(const Transition& a, const Transition& b);

// How a verdict came to be.
enum class Provenance {
  kOracleRule,    // a scripted rule fired; detail names the rule
  kLlmText,       // parsed from a model response; detail is the raw text
  kParseFailure,  // response unusable; detail says why
  kCacheHit,      // served from the verdict cache; detail is the stored one
};

const char* provenance_name(Provenance p);

// The evaluator's output for one (state, action) pair.
struct ShiftVerdict {
  int shift = 0;  // always in {-1, 0, +1}
  double scale = 1.0;
  Provenance provenance = Provenance::kOracleRule;
  std::string detail;
};

}  // namespace rglab
