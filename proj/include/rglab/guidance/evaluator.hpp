#pragma once

#include <memory>
#include <string>

#include "rglab/core/env.hpp"
#include "rglab/core/types.hpp"
#include "rglab/guidance/blackjack_oracle.hpp"

namespace rglab::guidance {

enum class EvaluatorKind { kNull, kScripted, kLlm };

const char* evaluator_kind_name(EvaluatorKind kind);
EvaluatorKind evaluator_kind_from(const std::string& name);

struct EvaluatorStats {
  long queries = 0;
  long failures = 0;
  long cache_hits = 0;
  long cache_corrupt_lines = 0;
};

// Scores one (state, action) pair with a bounded reward shift. Scripted
// evaluators are pure functions of their inputs; LLM-backed ones degrade to
// a zero verdict on any failure so training never halts on the evaluator.
class Evaluator {
 public:
  virtual ~Evaluator() = default;
  virtual EvaluatorKind kind() const = 0;
  virtual ShiftVerdict evaluate(const Observation& obs, int action) = 0;
  const EvaluatorStats& stats() const { return stats_; }

 protected:
  EvaluatorStats stats_;
};

// The baseline evaluator: every verdict is (0, scale).
class NullEvaluator : public Evaluator {
 public:
  explicit NullEvaluator(double scale) : scale_(scale) {}
  EvaluatorKind kind() const override { return EvaluatorKind::kNull; }
  ShiftVerdict evaluate(const Observation&, int) override {
    return ShiftVerdict{0, scale_, Provenance::kOracleRule, "null"};
  }

 private:
  double scale_;
};

// Blackjack prior: approve the action the expectimax table prefers,
// disapprove the other, stay neutral inside the indifference band where
// the action values are too close to call.
class BlackjackOracleEvaluator : public Evaluator {
 public:
  BlackjackOracleEvaluator(double scale, double tie_band = 0.01);
  EvaluatorKind kind() const override { return EvaluatorKind::kScripted; }
  ShiftVerdict evaluate(const Observation& obs, int action) override;
  const BasicStrategyTable& table() const { return table_; }

 private:
  double scale_;
  double tie_band_;
  BasicStrategyTable table_;
};

// Cart-pole prior: the pole's fall side is sign(theta + 0.5 * theta_dot);
// approve pushes toward it, disapprove pushes away, stay neutral inside a
// dead band around upright.
class CartPoleOracleEvaluator : public Evaluator {
 public:
  explicit CartPoleOracleEvaluator(double scale, double dead_band_rad = 0.01);
  EvaluatorKind kind() const override { return EvaluatorKind::kScripted; }
  ShiftVerdict evaluate(const Observation& obs, int action) override;

 private:
  double scale_;
  double dead_band_;
};

// Watch-repair prior: knows each brand's expected total repair cost.
// Approves taking repairs priced comfortably above it and declining ones
// priced below, disapproves the reverse, and is silent both inside the
// margin band and on the continue/abandon phase.
class WatchOracleEvaluator : public Evaluator {
 public:
  // expected_costs indexed by brand; margin_fraction of the selling price
  // defines the indifference band.
  WatchOracleEvaluator(double scale, std::vector<double> expected_costs,
                       double margin_fraction = 0.1);
  EvaluatorKind kind() const override { return EvaluatorKind::kScripted; }
  ShiftVerdict evaluate(const Observation& obs, int action) override;

 private:
  double scale_;
  std::vector<double> expected_costs_;
  double margin_fraction_;
};

// Recommender prior: when observed satisfaction is low, approve slates
// whose mean kaleness sits in the healthy band and disapprove clearly
// chocolate-heavy ones; otherwise stay neutral.
class ChocKaleOracleEvaluator : public Evaluator {
 public:
  ChocKaleOracleEvaluator(double scale, SlateSpec spec, double band_low = 0.4,
                          double band_high = 0.7, double choc_limit = 0.2,
                          double low_sat = 0.5);
  EvaluatorKind kind() const override { return EvaluatorKind::kScripted; }
  ShiftVerdict evaluate(const Observation& obs, int action) override;

 private:
  double scale_;
  SlateSpec spec_;
  double band_low_, band_high_, choc_limit_, low_sat_;
};

// Builds the scripted prior bound to an environment.
std::unique_ptr<Evaluator> make_scripted_evaluator(const Environment& env, double scale);

}  // namespace rglab::guidance
