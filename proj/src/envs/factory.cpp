#include "rglab/envs/factory.hpp"

#include <set>
#include <stdexcept>

#include "rglab/envs/blackjack.hpp"
#include "rglab/envs/cartpole.hpp"
#include "rglab/envs/choc_kale.hpp"
#include "rglab/envs/watch_repair.hpp"

namespace rglab::envs {

namespace {

using nlohmann::json;

class ParamReader {
 public:
  ParamReader(const json& params, std::string scope) : params_(params), scope_(std::move(scope)) {
    if (!params_.is_object()) {
      throw std::invalid_argument(scope_ + ": params must be an object");
    }
  }

  void read(const char* key, double& out) {
    if (auto it = params_.find(key); it != params_.end()) {
      if (!it->is_number()) bad_.push_back(std::string(key) + " (expected number)");
      else out = it->get<double>();
      seen_.insert(key);
    }
  }

  void read(const char* key, int& out) {
    if (auto it = params_.find(key); it != params_.end()) {
      if (!it->is_number_integer()) bad_.push_back(std::string(key) + " (expected integer)");
      else out = it->get<int>();
      seen_.insert(key);
    }
  }

  void mark_seen(const char* key) { seen_.insert(key); }

  void finish() {
    std::string message;
    for (auto it = params_.begin(); it != params_.end(); ++it) {
      if (!seen_.count(it.key())) {
        message += (message.empty() ? "" : "; ") + std::string("unknown key '") + it.key() + "'";
      }
    }
    for (const auto& b : bad_) {
      message += (message.empty() ? "" : "; ") + std::string("bad value for '") + b + "'";
    }
    if (!message.empty()) throw std::invalid_argument(scope_ + ": " + message);
  }

 private:
  const json& params_;
  std::string scope_;
  std::set<std::string> seen_;
  std::vector<std::string> bad_;
};

std::unique_ptr<Environment> make_cartpole(const json& params) {
  CartPoleConfig cfg;
  ParamReader r(params, "env cartpole");
  r.read("gravity", cfg.gravity);
  r.read("cart_mass", cfg.cart_mass);
  r.read("pole_mass", cfg.pole_mass);
  r.read("half_length", cfg.half_length);
  r.read("force_mag", cfg.force_mag);
  r.read("dt", cfg.dt);
  r.read("x_limit", cfg.x_limit);
  r.read("theta_limit_deg", cfg.theta_limit_deg);
  r.read("max_steps", cfg.max_steps);
  r.read("reset_span", cfg.reset_span);
  r.finish();
  return std::make_unique<CartPoleEnv>(cfg);
}

std::unique_ptr<Environment> make_blackjack(const json& params) {
  ParamReader r(params, "env blackjack");
  r.finish();  // no tunables
  return std::make_unique<BlackjackEnv>();
}

std::unique_ptr<Environment> make_watchrepair(const json& params) {
  WatchRepairConfig cfg;
  ParamReader r(params, "env watchrepair");
  r.read("max_repair_steps", cfg.max_repair_steps);
  if (auto it = params.find("brands"); it != params.end()) {
    if (!it->is_array()) throw std::invalid_argument("env watchrepair: brands must be an array");
    for (const auto& item : *it) {
      WatchBrand b;
      ParamReader br(item, "env watchrepair brand");
      br.read("sell_price", b.sell_price);
      br.read("cost_mean", b.cost_mean);
      br.read("cost_stddev", b.cost_stddev);
      br.read("completion_prob", b.completion_prob);
      br.finish();
      cfg.brands.push_back(b);
    }
    r.mark_seen("brands");
  }
  r.finish();
  return std::make_unique<WatchRepairEnv>(cfg);
}

std::unique_ptr<Environment> make_chockale(const json& params) {
  ChocKaleConfig cfg;
  ParamReader r(params, "env chockale");
  r.read("num_docs", cfg.num_docs);
  r.read("slate_size", cfg.slate_size);
  r.read("tau", cfg.tau);
  r.read("beta", cfg.beta);
  r.read("eta", cfg.eta);
  r.read("mu_kale", cfg.mu_kale);
  r.read("sigma_kale", cfg.sigma_kale);
  r.read("mu_choc", cfg.mu_choc);
  r.read("sigma_choc", cfg.sigma_choc);
  r.read("initial_budget", cfg.initial_budget);
  r.read("session_cost", cfg.session_cost);
  r.read("satisfaction_bonus", cfg.satisfaction_bonus);
  r.read("observation_noise", cfg.observation_noise);
  r.finish();
  return std::make_unique<ChocKaleEnv>(cfg);
}

}  // namespace

std::unique_ptr<Environment> make_env(const EnvSpec& spec) {
  if (spec.name == "cartpole") return make_cartpole(spec.params);
  if (spec.name == "blackjack") return make_blackjack(spec.params);
  if (spec.name == "watchrepair") return make_watchrepair(spec.params);
  if (spec.name == "chockale") return make_chockale(spec.params);
  throw std::invalid_argument("make_env: unknown environment '" + spec.name + "'");
}

}  // namespace rglab::envs
