#include "rglab/guidance/evaluator.hpp"

#include <cmath>
#include <stdexcept>

#include "rglab/envs/choc_kale.hpp"
#include "rglab/envs/watch_repair.hpp"

namespace rglab::guidance {

const char* evaluator_kind_name(EvaluatorKind kind) {
  switch (kind) {
    case EvaluatorKind::kNull: return "null";
    case EvaluatorKind::kScripted: return "scripted";
    case EvaluatorKind::kLlm: return "llm";
  }
  return "unknown";
}

EvaluatorKind evaluator_kind_from(const std::string& name) {
  if (name == "null") return EvaluatorKind::kNull;
  if (name == "scripted") return EvaluatorKind::kScripted;
  if (name == "llm") return EvaluatorKind::kLlm;
  throw std::invalid_argument("unknown evaluator kind '" + name + "'");
}

// ---- blackjack ----

BlackjackOracleEvaluator::BlackjackOracleEvaluator(double scale, double tie_band)
    : scale_(scale), tie_band_(tie_band), table_(BasicStrategyTable::build()) {}

ShiftVerdict BlackjackOracleEvaluator::evaluate(const Observation& obs, int action) {
  ++stats_.queries;
  const int player = static_cast<int>(obs.box[0]);
  const int dealer = static_cast<int>(obs.box[1]);
  const bool ace = obs.box[2] != 0.0;
  const StrategyCell& cell = table_.cell(player, ace, dealer);
  if (cell.gap() <= tie_band_) {
    return ShiftVerdict{0, scale_, Provenance::kOracleRule, "blackjack:indifferent"};
  }
  const bool approved = action == cell.optimal_action();
  return ShiftVerdict{approved ? 1 : -1, scale_, Provenance::kOracleRule,
                      approved ? "blackjack:optimal" : "blackjack:dominated"};
}

// ---- cart-pole ----

CartPoleOracleEvaluator::CartPoleOracleEvaluator(double scale, double dead_band_rad)
    : scale_(scale), dead_band_(dead_band_rad) {}

ShiftVerdict CartPoleOracleEvaluator::evaluate(const Observation& obs, int action) {
  ++stats_.queries;
  const double theta = obs.box[2];
  const double theta_dot = obs.box[3];
  const double fall = theta + 0.5 * theta_dot;
  if (std::abs(fall) < dead_band_) {
    return ShiftVerdict{0, scale_, Provenance::kOracleRule, "cartpole:upright"};
  }
  const int push = action == 1 ? 1 : -1;  // +1 pushes right
  const bool toward_fall = (fall > 0.0) == (push > 0);
  return ShiftVerdict{toward_fall ? 1 : -1, scale_, Provenance::kOracleRule,
                      toward_fall ? "cartpole:toward-fall" : "cartpole:away-from-fall"};
}

// ---- watch repair ----

WatchOracleEvaluator::WatchOracleEvaluator(double scale, std::vector<double> expected_costs,
                                           double margin_fraction)
    : scale_(scale), expected_costs_(std::move(expected_costs)),
      margin_fraction_(margin_fraction) {}

ShiftVerdict WatchOracleEvaluator::evaluate(const Observation& obs, int action) {
  ++stats_.queries;
  const int phase = static_cast<int>(obs.box[2]);
  if (phase != 0) {
    // The prior covers only the take/decline decision.
    return ShiftVerdict{0, scale_, Provenance::kOracleRule, "watch:uncovered-phase"};
  }
  const auto brand = static_cast<std::size_t>(obs.box[0]);
  const double sell = obs.box[1];
  const double margin = margin_fraction_ * sell;
  const double edge = sell - expected_costs_.at(brand);
  if (std::abs(edge) <= margin) {
    return ShiftVerdict{0, scale_, Provenance::kOracleRule, "watch:marginal"};
  }
  const bool should_repair = edge > 0.0;
  const bool approved = (action == 1) == should_repair;
  return ShiftVerdict{approved ? 1 : -1, scale_, Provenance::kOracleRule,
                      approved ? "watch:sound-decision" : "watch:unsound-decision"};
}

// ---- choc vs kale ----

ChocKaleOracleEvaluator::ChocKaleOracleEvaluator(double scale, SlateSpec spec, double band_low,
                                                 double band_high, double choc_limit,
                                                 double low_sat)
    : scale_(scale), spec_(std::move(spec)), band_low_(band_low), band_high_(band_high),
      choc_limit_(choc_limit), low_sat_(low_sat) {}

ShiftVerdict ChocKaleOracleEvaluator::evaluate(const Observation& obs, int action) {
  ++stats_.queries;
  const double sat = obs.box[0];
  if (sat >= low_sat_) {
    return ShiftVerdict{0, scale_, Provenance::kOracleRule, "chockale:satisfied"};
  }
  const double mean_k = spec_.mean_kaleness(action);
  if (mean_k >= band_low_ && mean_k <= band_high_) {
    return ShiftVerdict{1, scale_, Provenance::kOracleRule, "chockale:healthy-slate"};
  }
  if (mean_k < choc_limit_) {
    return ShiftVerdict{-1, scale_, Provenance::kOracleRule, "chockale:chocolate-binge"};
  }
  return ShiftVerdict{0, scale_, Provenance::kOracleRule, "chockale:uncovered"};
}

// ---- factory ----

std::unique_ptr<Evaluator> make_scripted_evaluator(const Environment& env, double scale) {
  const std::string& id = env.env_id();
  if (id == "blackjack") return std::make_unique<BlackjackOracleEvaluator>(scale);
  if (id == "cartpole") return std::make_unique<CartPoleOracleEvaluator>(scale);
  if (id == "watchrepair") {
    const auto& watch = dynamic_cast<const envs::WatchRepairEnv&>(env);
    std::vector<double> costs;
    for (int b = 0; b < watch.brand_count(); ++b) costs.push_back(watch.expected_total_cost(b));
    return std::make_unique<WatchOracleEvaluator>(scale, std::move(costs));
  }
  if (id == "chockale") {
    const SlateSpec* spec = env.slate_spec();
    if (!spec) throw std::invalid_argument("chockale oracle needs a slate spec");
    return std::make_unique<ChocKaleOracleEvaluator>(scale, *spec);
  }
  throw std::invalid_argument("no scripted evaluator for environment '" + id + "'");
}

}  // namespace rglab::guidance
