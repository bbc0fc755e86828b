#pragma once

#include "rglab/core/env.hpp"

namespace rglab::envs {

struct CartPoleConfig {
  double gravity = 9.8;
  double cart_mass = 1.0;
  double pole_mass = 0.1;
  double half_length = 0.5;
  double force_mag = 10.0;
  double dt = 0.02;
  double x_limit = 2.4;
  double theta_limit_deg = 12.0;
  int max_steps = 500;
  double reset_span = 0.05;  // uniform(-span, span) on all four dims
};

// Classic cart-pole with Euler integration. Actions: 0 = push left,
// 1 = push right. Reward 1.0 per step; the episode ends when the cart or
// pole leaves its limits or the step cap is hit.
class CartPoleEnv : public Environment {
 public:
  explicit CartPoleEnv(CartPoleConfig config = {});

  const std::string& env_id() const override { return id_; }
  int action_count() const override { return 2; }
  int observation_arity() const override { return 4; }

  Observation reset(RngStream& stream) override;
  StepResult step(int action, RngStream& stream) override;

  std::uint64_t state_key(const Observation& obs) const override;
  std::string action_name(const Observation& obs, int action) const override;
  std::string task_card() const override;

  const CartPoleConfig& config() const { return config_; }
  double theta_limit_rad() const;
  bool state_terminal(double x, double theta) const;

  // Test support: overwrite the physical state without touching the stream.
  void set_state(double x, double x_dot, double theta, double theta_dot);

 private:
  Observation observe() const;

  CartPoleConfig config_;
  std::string id_ = "cartpole";
  double x_ = 0.0, x_dot_ = 0.0, theta_ = 0.0, theta_dot_ = 0.0;
  int steps_ = 0;
  bool done_ = true;
};

}  // namespace rglab::envs
