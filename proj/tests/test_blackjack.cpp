#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rglab/core/rng.hpp"
#include "rglab/envs/blackjack.hpp"

using namespace rglab;
using envs::BlackjackEnv;
using envs::HandTotal;
using envs::add_card;
using envs::settle;

TEST_CASE("hand totals with the usable-ace convention") {
  HandTotal h = add_card(HandTotal{}, 1);
  CHECK(h.total == 11);
  CHECK(h.usable_ace);
  h = add_card(h, 1);  // second ace counts as 1
  CHECK(h.total == 12);
  CHECK(h.usable_ace);
  h = add_card(h, 10);  // demote the ace instead of busting
  CHECK(h.total == 12);
  CHECK_FALSE(h.usable_ace);

  HandTotal hard = add_card(add_card(HandTotal{}, 9), 7);
  CHECK(hard.total == 16);
  CHECK_FALSE(hard.usable_ace);
}

TEST_CASE("settlement comparison rule") {
  CHECK(settle(21, 20) == 1);  // player 21, dealer ends 20 -> win
  CHECK(settle(17, 17) == 0);
  CHECK(settle(18, 19) == -1);
}

TEST_CASE("player 16 hitting a ten busts") {
  // find a stream whose first card draw is a ten
  std::uint64_t seed = 0;
  for (;; ++seed) {
    RngStream probe(seed, "env");
    if (BlackjackEnv::draw_card(probe) == 10) break;
  }
  BlackjackEnv env;
  env.reset_to(16, 5, false);
  RngStream stream(seed, "env");
  const StepResult r = env.step(1, stream);
  CHECK(r.intrinsic_reward == -1.0);
  CHECK(r.done);
  CHECK(r.obs.box[0] == 26.0);
}

TEST_CASE("hit below 12 can never bust") {
  BlackjackEnv env;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    env.reset_to(11, 6, false);
    RngStream stream(seed, "env");
    const StepResult r = env.step(1, stream);
    CHECK(r.intrinsic_reward == 0.0);
    CHECK_FALSE(r.done);
  }
}

TEST_CASE("stick settles against a dealer drawing to 17") {
  BlackjackEnv env;
  int wins = 0, losses = 0, pushes = 0;
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    env.reset_to(21, 6, false);
    RngStream stream(seed, "env");
    const StepResult r = env.step(0, stream);
    CHECK(r.done);
    if (r.intrinsic_reward > 0) ++wins;
    else if (r.intrinsic_reward < 0) ++losses;
    else ++pushes;
  }
  // sticking on 21 never loses: the dealer can at best push
  CHECK(losses == 0);
  CHECK(wins > 0);
  CHECK(pushes > 0);
}

TEST_CASE("infinite-deck card frequencies") {
  RngStream stream(42, "cards");
  std::vector<long> counts(11, 0);
  const long n = 1000000;
  for (long i = 0; i < n; ++i) ++counts[static_cast<std::size_t>(BlackjackEnv::draw_card(stream))];
  for (int c = 1; c <= 9; ++c) {
    CHECK(std::abs(static_cast<double>(counts[static_cast<std::size_t>(c)]) / n - 1.0 / 13) <
          0.003);
  }
  CHECK(std::abs(static_cast<double>(counts[10]) / n - 4.0 / 13) < 0.003);
}

TEST_CASE("episode flow and errors") {
  BlackjackEnv env;
  RngStream stream(7, "env");
  const Observation obs = env.reset(stream);
  CHECK(obs.box.size() == 3);
  CHECK(obs.box[0] >= 4);
  CHECK(obs.box[0] <= 21);
  CHECK(obs.box[1] >= 1);
  CHECK(obs.box[1] <= 10);
  CHECK_THROWS_AS(env.step(2, stream), std::invalid_argument);
  env.step(0, stream);  // stick ends the episode
  CHECK_THROWS_AS(env.step(0, stream), std::logic_error);
  CHECK_THROWS_AS(env.reset_to(25, 5, false), std::invalid_argument);
  CHECK_THROWS_AS(env.reset_to(10, 5, true), std::invalid_argument);
}

TEST_CASE("state keys are unique across reachable states") {
  BlackjackEnv env;
  std::vector<bool> seen(400, false);
  for (int player = 4; player <= 21; ++player) {
    for (int dealer = 1; dealer <= 10; ++dealer) {
      for (int ace = 0; ace <= 1; ++ace) {
        if (ace == 1 && player < 12) continue;
        const Observation obs = env.reset_to(player, dealer, ace == 1);
        const auto key = env.state_key(obs);
        REQUIRE(key < seen.size());
        CHECK_FALSE(seen[key]);
        seen[key] = true;
      }
    }
  }
}
