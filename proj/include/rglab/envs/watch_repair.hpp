#pragma once

#include <vector>

#include "rglab/core/env.hpp"

namespace rglab::envs {

struct WatchBrand {
  double sell_price = 0.0;
  double cost_mean = 0.0;    // per work step, before truncation at zero
  double cost_stddev = 0.0;
  double completion_prob = 0.35;  // per work step; duration is capped
};

struct WatchRepairConfig {
  std::vector<WatchBrand> brands;  // empty -> default eight brands
  int max_repair_steps = 10;
};

std::vector<WatchBrand> default_watch_brands();

// Delayed-reward repair shop. Each episode presents one watch of a random
// brand with a known selling price and hidden per-step repair costs.
//
// Decision phase (phase 0): 0 = decline (episode ends, reward 0),
//                           1 = repair (work begins immediately).
// Repair phase (phase 1):   0 = abandon (episode ends, reward = -costs so far),
//                           1 = continue (one more work step).
//
// Every work step draws a cost from the brand's truncated Gaussian and may
// complete the repair (geometric duration capped at max_repair_steps). Costs
// accrue silently: the intrinsic reward is 0 until the terminal step, which
// pays sell_price minus the total cost, so the profitability of the decision
// only becomes visible once all costs are in.
class WatchRepairEnv : public Environment {
 public:
  explicit WatchRepairEnv(WatchRepairConfig config = {});

  const std::string& env_id() const override { return id_; }
  int action_count() const override { return 2; }
  int observation_arity() const override { return 4; }

  Observation reset(RngStream& stream) override;
  StepResult step(int action, RngStream& stream) override;

  std::uint64_t state_key(const Observation& obs) const override;
  std::string action_name(const Observation& obs, int action) const override;
  std::string task_card() const override;

  // 1.0 when the decision taken this episode matched the sign of the
  // brand's expected profit, else 0.0.
  std::optional<double> episode_success() const override;

  const WatchRepairConfig& config() const { return config_; }
  int brand_count() const { return static_cast<int>(config_.brands.size()); }

  // Closed-form expectations used by the scripted prior and by tests.
  double expected_step_cost(int brand) const;
  double expected_duration(int brand) const;
  double expected_total_cost(int brand) const;
  double expected_profit(int brand) const;

  // Test support: start an episode on a fixed brand.
  Observation reset_to_brand(int brand);

 private:
  Observation observe() const;
  StepResult work_step(RngStream& stream);
  double draw_cost(RngStream& stream);

  WatchRepairConfig config_;
  std::string id_ = "watchrepair";
  int brand_ = 0;
  int phase_ = 0;  // 0 = deciding, 1 = repairing
  int work_steps_ = 0;
  double total_cost_ = 0.0;
  bool done_ = true;
  std::optional<double> decision_success_;
};

}  // namespace rglab::envs
