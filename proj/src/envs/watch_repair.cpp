#include "rglab/envs/watch_repair.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rglab/core/format.hpp"

namespace rglab::envs {

std::vector<WatchBrand> default_watch_brands() {
  // Four profitable and four money-losing brands, all decisively outside a
  // 10% margin of the selling price but noisy enough that the profit sign
  // takes many samples to estimate.
  return {
      {4.0, 0.79, 0.87, 0.35},  {6.0, 2.04, 2.24, 0.35},  {9.0, 1.89, 2.08, 0.35},
      {12.0, 3.93, 4.32, 0.35}, {15.0, 3.22, 3.54, 0.35}, {18.0, 5.66, 6.23, 0.35},
      {21.0, 4.29, 4.72, 0.35}, {25.0, 8.38, 9.22, 0.35},
  };
}

WatchRepairEnv::WatchRepairEnv(WatchRepairConfig config) : config_(std::move(config)) {
  if (config_.brands.empty()) config_.brands = default_watch_brands();
  if (config_.max_repair_steps < 1) {
    throw std::invalid_argument("WatchRepairEnv: max_repair_steps < 1");
  }
  for (const auto& b : config_.brands) {
    if (b.sell_price <= 0.0) throw std::invalid_argument("WatchRepairEnv: sell_price <= 0");
    if (b.cost_stddev < 0.0) throw std::invalid_argument("WatchRepairEnv: negative cost stddev");
    if (b.completion_prob <= 0.0 || b.completion_prob > 1.0) {
      throw std::invalid_argument("WatchRepairEnv: completion_prob out of (0, 1]");
    }
  }
}

Observation WatchRepairEnv::observe() const {
  const WatchBrand& b = config_.brands[static_cast<std::size_t>(brand_)];
  Observation obs;
  obs.box = {static_cast<double>(brand_), b.sell_price, static_cast<double>(phase_),
             static_cast<double>(work_steps_)};
  obs.env_id = id_;
  if (phase_ == 0) {
    obs.human = "Brand " + std::to_string(brand_) + " watch with selling price " +
                format_fixed(b.sell_price, 2) + "; deciding whether to take the repair.";
  } else {
    obs.human = "Brand " + std::to_string(brand_) + " watch with selling price " +
                format_fixed(b.sell_price, 2) + "; repair under way, " +
                std::to_string(work_steps_) + " step(s) done so far.";
  }
  return obs;
}

Observation WatchRepairEnv::reset(RngStream& stream) {
  brand_ = stream.next_int(brand_count());
  phase_ = 0;
  work_steps_ = 0;
  total_cost_ = 0.0;
  done_ = false;
  decision_success_.reset();
  return observe();
}

Observation WatchRepairEnv::reset_to_brand(int brand) {
  if (brand < 0 || brand >= brand_count()) {
    throw std::invalid_argument("WatchRepairEnv::reset_to_brand: bad brand");
  }
  brand_ = brand;
  phase_ = 0;
  work_steps_ = 0;
  total_cost_ = 0.0;
  done_ = false;
  decision_success_.reset();
  return observe();
}

double WatchRepairEnv::draw_cost(RngStream& stream) {
  const WatchBrand& b = config_.brands[static_cast<std::size_t>(brand_)];
  double cost;
  do {
    cost = stream.next_gaussian(b.cost_mean, b.cost_stddev);
  } while (cost < 0.0);
  return cost;
}

StepResult WatchRepairEnv::work_step(RngStream& stream) {
  const WatchBrand& b = config_.brands[static_cast<std::size_t>(brand_)];
  total_cost_ += draw_cost(stream);
  ++work_steps_;
  bool complete = work_steps_ >= config_.max_repair_steps;
  if (!complete) complete = stream.next_uniform() < b.completion_prob;
  if (complete) {
    done_ = true;
    return StepResult{observe(), b.sell_price - total_cost_, true};
  }
  phase_ = 1;
  return StepResult{observe(), 0.0, false};
}

StepResult WatchRepairEnv::step(int action, RngStream& stream) {
  if (action < 0 || action >= action_count()) {
    throw std::invalid_argument("WatchRepairEnv::step: action out of range");
  }
  if (done_) throw std::logic_error("WatchRepairEnv::step: episode already terminal");

  if (phase_ == 0) {
    const bool profitable = expected_profit(brand_) > 0.0;
    decision_success_ = ((action == 1) == profitable) ? 1.0 : 0.0;
    if (action == 0) {  // decline
      done_ = true;
      return StepResult{observe(), 0.0, true};
    }
    return work_step(stream);
  }

  if (action == 0) {  // abandon: costs are sunk, no sale
    done_ = true;
    return StepResult{observe(), -total_cost_, true};
  }
  return work_step(stream);
}

std::uint64_t WatchRepairEnv::state_key(const Observation& obs) const {
  const int brand = static_cast<int>(obs.box[0]);
  const int phase = static_cast<int>(obs.box[2]);
  const int steps = std::min(static_cast<int>(obs.box[3]), config_.max_repair_steps);
  const int per_brand = 2 * (config_.max_repair_steps + 1);
  return static_cast<std::uint64_t>(brand * per_brand + phase * (config_.max_repair_steps + 1) +
                                    steps);
}

std::string WatchRepairEnv::action_name(const Observation& obs, int action) const {
  const int phase = static_cast<int>(obs.box[2]);
  if (phase == 0) return action == 0 ? "decline the repair" : "take the repair";
  return action == 0 ? "abandon the repair" : "continue the repair";
}

std::string WatchRepairEnv::task_card() const {
  return "A repair shop is offered watches one at a time. The selling price of a repaired "
         "watch is known up front, but repair costs are uncertain: each work step incurs a "
         "hidden cost and the repair takes a random number of steps. Payment arrives only "
         "when the repair is finished, as the selling price minus everything spent, so a "
         "decision's profitability becomes apparent only after all costs are finalized.";
}

std::optional<double> WatchRepairEnv::episode_success() const { return decision_success_; }

double WatchRepairEnv::expected_step_cost(int brand) const {
  const WatchBrand& b = config_.brands.at(static_cast<std::size_t>(brand));
  if (b.cost_stddev == 0.0) return std::max(b.cost_mean, 0.0);
  // Mean of a Gaussian truncated to [0, inf).
  const double alpha = -b.cost_mean / b.cost_stddev;
  const double pdf = std::exp(-0.5 * alpha * alpha) / std::sqrt(2.0 * std::numbers::pi);
  const double tail = 0.5 * std::erfc(alpha / std::numbers::sqrt2);
  return b.cost_mean + b.cost_stddev * pdf / tail;
}

double WatchRepairEnv::expected_duration(int brand) const {
  const double p = config_.brands.at(static_cast<std::size_t>(brand)).completion_prob;
  const int k = config_.max_repair_steps;
  return (1.0 - std::pow(1.0 - p, k)) / p;
}

double WatchRepairEnv::expected_total_cost(int brand) const {
  return expected_duration(brand) * expected_step_cost(brand);
}

double WatchRepairEnv::expected_profit(int brand) const {
  return config_.brands.at(static_cast<std::size_t>(brand)).sell_price -
         expected_total_cost(brand);
}

}  // namespace rglab::envs
