#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rglab/core/rng.hpp"
#include "rglab/envs/choc_kale.hpp"

using namespace rglab;
using envs::ChocKaleConfig;
using envs::ChocKaleEnv;
using envs::Document;
using envs::UserModel;
using envs::UserState;

TEST_CASE("choice probability for a chocolate/kale pair") {
  // P(choose kaleness 0) = e / (e + 1) when the other item is pure kale.
  ChocKaleConfig cfg;
  UserModel user(cfg);
  const std::vector<Document> slate = {{0, 0.0}, {1, 1.0}};
  RngStream stream(42, "choice");
  long zeros = 0;
  const long n = 1000000;
  for (long i = 0; i < n; ++i) {
    if (user.choose(slate, stream) == 0) ++zeros;
  }
  const double expected = std::exp(1.0) / (std::exp(1.0) + 1.0);
  CHECK(std::abs(static_cast<double>(zeros) / n - expected) < 0.005);
  CHECK(expected == doctest::Approx(0.7311).epsilon(1e-3));
}

TEST_CASE("equal kaleness makes the choice uniform") {
  UserModel user(ChocKaleConfig{});
  const std::vector<Document> slate = {{0, 0.5}, {1, 0.5}, {2, 0.5}};
  RngStream stream(7, "choice");
  std::vector<long> counts(3, 0);
  const long n = 300000;
  for (long i = 0; i < n; ++i) ++counts[static_cast<std::size_t>(user.choose(slate, stream))];
  for (long c : counts) CHECK(std::abs(static_cast<double>(c) / n - 1.0 / 3) < 0.005);
}

TEST_CASE("single-item slates and empty slates") {
  UserModel user(ChocKaleConfig{});
  RngStream stream(1, "choice");
  CHECK(user.choose({{3, 0.8}}, stream) == 0);
  CHECK_THROWS_AS(user.choose({}, stream), std::invalid_argument);
}

TEST_CASE("exposure update: beta 1, pure kale, no noise") {
  ChocKaleConfig cfg;
  cfg.beta = 1.0;
  cfg.eta = 0.0;
  cfg.sigma_kale = 0.0;
  cfg.mu_kale = 0.0;
  UserModel user(cfg);
  UserState state = user.initial_state();
  CHECK(state.sat == 0.5);  // sigma(0)
  RngStream stream(1, "u");
  const double engagement = user.update(state, Document{0, 1.0}, stream);
  CHECK(state.nke == doctest::Approx(1.0).epsilon(1e-12));  // 2 * (1 - 1/2)
  CHECK(engagement == doctest::Approx(1.0).epsilon(1e-12)); // logNormal(0,0) = e^0
}

TEST_CASE("satisfaction is recomputed as sigma(tau * nke) after every update") {
  ChocKaleConfig cfg;
  cfg.tau = 1.7;
  UserModel user(cfg);
  UserState state = user.initial_state();
  RngStream stream(11, "u");
  for (int i = 0; i < 2000; ++i) {
    const Document doc{i % 10, (i % 10) / 9.0};
    user.update(state, doc, stream);
    const double expected = 1.0 / (1.0 + std::exp(-cfg.tau * state.nke));
    CHECK(std::abs(state.sat - expected) <= 1e-12);
  }
}

TEST_CASE("engagement sample means match exp(mu + sigma^2/2) at both endpoints and midpoint") {
  ChocKaleConfig cfg;
  UserModel user(cfg);
  RngStream stream(42, "engagement");
  for (double k : {0.0, 0.5, 1.0}) {
    UserState state = user.initial_state();
    double sum = 0.0;
    const long n = 1000000;
    for (long i = 0; i < n; ++i) {
      state.budget = cfg.initial_budget;  // keep the session alive
      sum += user.update(state, Document{0, k}, stream);
    }
    const double expected = user.expected_engagement(k);
    CHECK(std::abs(sum / n - expected) / expected < 0.02);
  }
}

TEST_CASE("budget always shrinks and the episode terminates") {
  ChocKaleEnv env;
  RngStream stream(3, "env");
  env.reset(stream);
  double last_budget = env.user_state().budget;
  long steps = 0;
  while (true) {
    const StepResult r = env.step(0, stream);  // chocolate-heavy slate
    ++steps;
    CHECK(env.user_state().budget < last_budget);
    last_budget = env.user_state().budget;
    if (r.done) break;
    REQUIRE(steps < 10000);
  }
  CHECK(steps > 10);
}

TEST_CASE("observed satisfaction is the latent value plus clamped noise") {
  ChocKaleEnv env;
  RngStream stream(13, "env");
  Observation obs = env.reset(stream);
  for (int i = 0; i < 200; ++i) {
    CHECK(obs.box[0] >= 0.0);
    CHECK(obs.box[0] <= 1.0);
    const StepResult r = env.step(i % env.action_count(), stream);
    // noise is additive around the latent state, so large deviations are rare
    CHECK(std::abs(r.obs.box[0] - env.user_state().sat) < 0.5);
    obs = r.obs;
    if (r.done) break;
  }
}

TEST_CASE("documents are served in id order with evenly spread kaleness") {
  ChocKaleEnv env;
  const auto& docs = env.documents();
  REQUIRE(docs.size() == 10);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    CHECK(docs[i].doc_id == static_cast<int>(i));
    CHECK(docs[i].kaleness == doctest::Approx(i / 9.0));
  }
  CHECK(env.action_count() == 45);  // C(10, 2)
}

TEST_CASE("slate env errors") {
  ChocKaleEnv env;
  RngStream stream(4, "env");
  env.reset(stream);
  CHECK_THROWS_AS(env.step(45, stream), std::invalid_argument);
  CHECK_THROWS_AS(env.step(-1, stream), std::invalid_argument);
}
