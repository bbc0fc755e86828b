#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rglab/core/rng.hpp"
#include "rglab/envs/watch_repair.hpp"

using namespace rglab;
using envs::WatchBrand;
using envs::WatchRepairConfig;
using envs::WatchRepairEnv;

TEST_CASE("decline ends the episode with zero reward") {
  WatchRepairEnv env;
  RngStream stream(1, "env");
  env.reset(stream);
  const StepResult r = env.step(0, stream);
  CHECK(r.intrinsic_reward == 0.0);
  CHECK(r.done);
  CHECK(env.episode_success().has_value());
}

TEST_CASE("degenerate zero-cost brand pays the full selling price") {
  WatchRepairConfig cfg;
  cfg.brands = {{20.0, 0.0, 0.0, 1.0}};  // completes on the first work step
  WatchRepairEnv env(cfg);
  RngStream stream(2, "env");
  env.reset(stream);
  const StepResult r = env.step(1, stream);
  CHECK(r.intrinsic_reward == 20.0);
  CHECK(r.done);
}

TEST_CASE("a repair episode conserves profit exactly") {
  // Deterministic unit costs make the hidden total checkable from the
  // episode length alone.
  WatchRepairConfig cfg;
  cfg.brands = {{20.0, 1.5, 0.0, 0.35}};
  cfg.max_repair_steps = 10;
  WatchRepairEnv env(cfg);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RngStream stream(seed, "env");
    env.reset(stream);
    double total_reward = 0.0;
    long work_steps = 0;
    StepResult r = env.step(1, stream);
    total_reward += r.intrinsic_reward;
    ++work_steps;
    while (!r.done) {
      r = env.step(1, stream);
      total_reward += r.intrinsic_reward;
      ++work_steps;
    }
    CHECK(work_steps <= cfg.max_repair_steps);
    CHECK(total_reward == 20.0 - 1.5 * static_cast<double>(work_steps));
  }
}

TEST_CASE("abandoning forfeits the accrued costs") {
  WatchRepairConfig cfg;
  cfg.brands = {{20.0, 1.5, 0.0, 0.0000001}};  // effectively never completes
  WatchRepairEnv env(cfg);
  RngStream stream(3, "env");
  env.reset(stream);
  StepResult r = env.step(1, stream);  // one work step
  REQUIRE_FALSE(r.done);
  r = env.step(1, stream);  // another
  REQUIRE_FALSE(r.done);
  r = env.step(0, stream);  // abandon
  CHECK(r.done);
  CHECK(r.intrinsic_reward == -3.0);
}

TEST_CASE("intermediate work steps pay nothing") {
  WatchRepairEnv env;
  RngStream stream(11, "env");
  for (int episode = 0; episode < 300; ++episode) {
    env.reset(stream);
    StepResult r = env.step(1, stream);
    while (!r.done) {
      CHECK(r.intrinsic_reward == 0.0);
      r = env.step(1, stream);
    }
  }
}

TEST_CASE("per-brand expected profits match the Monte Carlo oracle table") {
  // Frozen from a one-off 10^6-episode-per-brand Monte Carlo run of the
  // environment itself (seed 20240, always repair to completion).
  const double frozen_mc[] = {0.982700, -1.785652, 1.781821, -2.999088,
                              2.690262, -3.604655, 4.618152, -7.003365};
  WatchRepairEnv env;
  REQUIRE(env.brand_count() == 8);
  for (int b = 0; b < env.brand_count(); ++b) {
    CHECK(std::abs(env.expected_profit(b) - frozen_mc[b]) < 0.05);
  }
}

TEST_CASE("analytic expectations agree with a fresh Monte Carlo run") {
  WatchRepairEnv env;
  RngStream stream(99, "mc");
  for (int b = 0; b < env.brand_count(); ++b) {
    double total = 0.0;
    const long n = 100000;
    for (long e = 0; e < n; ++e) {
      env.reset_to_brand(b);
      StepResult r = env.step(1, stream);
      total += r.intrinsic_reward;
      while (!r.done) {
        r = env.step(1, stream);
        total += r.intrinsic_reward;
      }
    }
    const double sell = env.config().brands[static_cast<std::size_t>(b)].sell_price;
    CHECK(std::abs(total / n - env.expected_profit(b)) < 0.02 * sell + 0.1);
  }
}

TEST_CASE("every default brand sits outside the 10% margin band") {
  WatchRepairEnv env;
  for (int b = 0; b < env.brand_count(); ++b) {
    const double sell = env.config().brands[static_cast<std::size_t>(b)].sell_price;
    CHECK(std::abs(env.expected_profit(b)) > 0.1 * sell);
  }
}

TEST_CASE("decision success tracks the expected-profit sign") {
  WatchRepairEnv env;
  RngStream stream(5, "env");
  for (int b = 0; b < env.brand_count(); ++b) {
    env.reset_to_brand(b);
    StepResult r = env.step(1, stream);  // choose repair
    const bool profitable = env.expected_profit(b) > 0.0;
    CHECK(env.episode_success().value() == (profitable ? 1.0 : 0.0));
    while (!r.done) r = env.step(1, stream);
  }
}

TEST_CASE("errors") {
  WatchRepairEnv env;
  RngStream stream(6, "env");
  env.reset(stream);
  CHECK_THROWS_AS(env.step(2, stream), std::invalid_argument);
  env.step(0, stream);
  CHECK_THROWS_AS(env.step(0, stream), std::logic_error);
  CHECK_THROWS_AS(env.reset_to_brand(99), std::invalid_argument);
}
