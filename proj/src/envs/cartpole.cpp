#include "rglab/envs/cartpole.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rglab/core/format.hpp"

namespace rglab::envs {

CartPoleEnv::CartPoleEnv(CartPoleConfig config) : config_(config) {}

double CartPoleEnv::theta_limit_rad() const {
  return config_.theta_limit_deg * std::numbers::pi / 180.0;
}

bool CartPoleEnv::state_terminal(double x, double theta) const {
  return std::abs(x) > config_.x_limit || std::abs(theta) > theta_limit_rad();
}

Observation CartPoleEnv::observe() const {
  Observation obs;
  obs.box = {x_, x_dot_, theta_, theta_dot_};
  obs.env_id = id_;
  obs.human = "Cart at x=" + format_fixed(x_, 4) + " m moving at " + format_fixed(x_dot_, 4) +
              " m/s; pole tilted " + format_fixed(theta_ * 180.0 / std::numbers::pi, 4) +
              " degrees with angular velocity " + format_fixed(theta_dot_, 4) + " rad/s.";
  return obs;
}

Observation CartPoleEnv::reset(RngStream& stream) {
  const double span = config_.reset_span;
  x_ = -span + 2.0 * span * stream.next_uniform();
  x_dot_ = -span + 2.0 * span * stream.next_uniform();
  theta_ = -span + 2.0 * span * stream.next_uniform();
  theta_dot_ = -span + 2.0 * span * stream.next_uniform();
  steps_ = 0;
  done_ = state_terminal(x_, theta_);
  return observe();
}

StepResult CartPoleEnv::step(int action, RngStream&) {
  if (action < 0 || action >= action_count()) {
    throw std::invalid_argument("CartPoleEnv::step: action out of range");
  }
  if (done_) throw std::logic_error("CartPoleEnv::step: episode already terminal");

  const double force = action == 1 ? config_.force_mag : -config_.force_mag;
  const double total_mass = config_.cart_mass + config_.pole_mass;
  const double polemass_length = config_.pole_mass * config_.half_length;
  const double cos_theta = std::cos(theta_);
  const double sin_theta = std::sin(theta_);

  const double temp = (force + polemass_length * theta_dot_ * theta_dot_ * sin_theta) / total_mass;
  const double theta_acc =
      (config_.gravity * sin_theta - cos_theta * temp) /
      (config_.half_length * (4.0 / 3.0 - config_.pole_mass * cos_theta * cos_theta / total_mass));
  const double x_acc = temp - polemass_length * theta_acc * cos_theta / total_mass;

  x_ += config_.dt * x_dot_;
  x_dot_ += config_.dt * x_acc;
  theta_ += config_.dt * theta_dot_;
  theta_dot_ += config_.dt * theta_acc;
  ++steps_;

  done_ = state_terminal(x_, theta_) || steps_ >= config_.max_steps;
  return StepResult{observe(), 1.0, done_};
}

std::uint64_t CartPoleEnv::state_key(const Observation& obs) const {
  // Coarse 8^4 grid; linear learners use tile coding instead.
  auto bin = [](double v, double lo, double hi) {
    const double t = (v - lo) / (hi - lo);
    int b = static_cast<int>(t * 8.0);
    return static_cast<std::uint64_t>(std::min(std::max(b, 0), 7));
  };
  const double tl = theta_limit_rad();
  return bin(obs.box[0], -config_.x_limit, config_.x_limit) * 512 +
         bin(obs.box[1], -3.0, 3.0) * 64 + bin(obs.box[2], -tl, tl) * 8 +
         bin(obs.box[3], -3.5, 3.5);
}

std::string CartPoleEnv::action_name(const Observation&, int action) const {
  return action == 0 ? "push cart left" : "push cart right";
}

std::string CartPoleEnv::task_card() const {
  return "A pole is balanced upright on a cart that slides along a track. "
         "Each step the agent pushes the cart left or right. The episode ends when the pole "
         "tilts more than " + format_fixed(config_.theta_limit_deg, 0) +
         " degrees or the cart leaves the track, and the goal is to keep it balanced as long "
         "as possible.";
}

void CartPoleEnv::set_state(double x, double x_dot, double theta, double theta_dot) {
  x_ = x;
  x_dot_ = x_dot;
  theta_ = theta;
  theta_dot_ = theta_dot;
  steps_ = 0;
  done_ = state_terminal(x_, theta_);
}

}  // namespace rglab::envs
