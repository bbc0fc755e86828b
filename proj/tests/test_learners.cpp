#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <sstream>

#include "rglab/envs/blackjack.hpp"
#include "rglab/envs/cartpole.hpp"
#include "rglab/envs/choc_kale.hpp"
#include "rglab/learners/learner.hpp"
#include "support/chain_mdp.hpp"

using namespace rglab;
using namespace rglab::learners;

namespace {

Observation make_obs(double value) {
  return Observation{{value}, "state " + std::to_string(value), "toy"};
}

StateKeyFn toy_key() {
  return [](const Observation& obs) { return static_cast<StateKey>(obs.box[0]); };
}

Transition toy_transition(double s, int a, double r, double next, bool done) {
  return Transition::make(make_obs(s), a, r, 0, 1.0, make_obs(next), done);
}

}  // namespace

TEST_CASE("td_update one-step collapse at gamma 0 alpha 1") {
  QTable q(2, 0.0);
  LearnerConfig cfg;
  cfg.gamma = 0.0;
  cfg.alpha = 1.0;
  td_update(q, {toy_transition(0, 1, 2.0, 1, false)}, cfg, toy_key());
  CHECK(q.value(0, 1) == 2.0);
  CHECK(q.visits(0, 1) == 1);
}

TEST_CASE("td_update ignores the bootstrap on terminal transitions") {
  QTable q(2, 0.0);
  q.set_value(1, 0, 100.0);  // tempting successor value
  LearnerConfig cfg;
  cfg.gamma = 0.9;
  cfg.alpha = 1.0;
  td_update(q, {toy_transition(0, 0, 3.0, 1, true)}, cfg, toy_key());
  CHECK(q.value(0, 0) == 3.0);
}

TEST_CASE("td converges to exact value iteration on the 3-state chain") {
  const double gamma = 0.9;
  const auto q_star = chain_mdp::solve(gamma);

  QTable q(2, 0.0);
  LearnerConfig cfg;
  cfg.gamma = gamma;
  cfg.alpha = 0.5;
  RngStream stream(42, "chain");

  // Sweep all state-action pairs repeatedly with a decaying step size;
  // deterministic transitions make this converge to Q* exactly.
  for (int iter = 0; iter < 4000; ++iter) {
    cfg.alpha = std::max(0.01, 0.5 / (1.0 + iter * 0.01));
    std::vector<Transition> batch;
    for (int s = 0; s < 2; ++s) {
      for (int a = 0; a < 2; ++a) {
        const auto t = chain_mdp::step(s, a);
        batch.push_back(toy_transition(s, a, t.reward, t.next, t.done));
      }
    }
    td_update(q, batch, cfg, toy_key());
  }
  for (int s = 0; s < 2; ++s) {
    for (int a = 0; a < 2; ++a) {
      CHECK(std::abs(q.value(static_cast<StateKey>(s), a) - q_star[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)]) < 1e-6);
    }
  }
}

TEST_CASE("mc_update demands a terminated episode") {
  QTable q(2, 0.0);
  LearnerConfig cfg;
  CHECK_THROWS_AS(mc_update(q, {toy_transition(0, 0, 1.0, 1, false)}, cfg, toy_key()),
                  std::logic_error);
  CHECK_THROWS_AS(mc_update(q, {}, cfg, toy_key()), std::invalid_argument);
}

TEST_CASE("mc_update first-visit running average") {
  QTable q(2, 0.0);
  LearnerConfig cfg;
  cfg.gamma = 1.0;
  // state 0 visited twice in one episode; only the first visit counts
  std::vector<Transition> episode = {
      toy_transition(0, 0, 1.0, 0, false),
      toy_transition(0, 0, 2.0, 1, false),
      toy_transition(1, 1, 3.0, 2, true),
  };
  mc_update(q, episode, cfg, toy_key());
  CHECK(q.value(0, 0) == 6.0);  // G from the first visit: 1 + 2 + 3
  CHECK(q.visits(0, 0) == 1);
  CHECK(q.value(1, 1) == 3.0);

  // running average across episodes
  mc_update(q, {toy_transition(1, 1, 5.0, 2, true)}, cfg, toy_key());
  CHECK(q.value(1, 1) == 4.0);
  CHECK(q.visits(1, 1) == 2);
}

TEST_CASE("epsilon-greedy selection") {
  envs::BlackjackEnv env;
  LearnerSpec spec;
  spec.config.q_init = 0.0;
  auto learner = make_learner(spec, env);
  const Observation obs = env.reset_to(14, 6, false);

  SUBCASE("epsilon 1 is uniform over actions") {
    RngStream stream(9, "policy");
    long ones = 0;
    const long n = 100000;
    for (long i = 0; i < n; ++i) ones += learner->select_action(obs, 1.0, stream);
    CHECK(std::abs(static_cast<double>(ones) / n - 0.5) < 0.01);
  }
  SUBCASE("epsilon 0 takes the argmax") {
    auto* td = dynamic_cast<TabularTDLearner*>(learner.get());
    td->table().set_value(env.state_key(obs), 0, 0.2);
    td->table().set_value(env.state_key(obs), 1, 0.7);
    RngStream stream(9, "policy");
    for (int i = 0; i < 100; ++i) CHECK(learner->select_action(obs, 0.0, stream) == 1);
  }
  SUBCASE("exact ties break to the lowest action index") {
    auto* td = dynamic_cast<TabularTDLearner*>(learner.get());
    td->table().set_value(env.state_key(obs), 0, 0.5);
    td->table().set_value(env.state_key(obs), 1, 0.5);
    RngStream stream(9, "policy");
    for (int i = 0; i < 100; ++i) CHECK(learner->select_action(obs, 0.0, stream) == 0);
  }
}

TEST_CASE("replay buffer is FIFO and deterministic") {
  ReplayBuffer buffer(3);
  for (int i = 0; i < 5; ++i) buffer.push(toy_transition(i, 0, i, i + 1, false));
  CHECK(buffer.size() == 3);
  CHECK(buffer.at(0).state.box[0] == 2.0);  // oldest survivor
  CHECK(buffer.at(2).state.box[0] == 4.0);

  RngStream a(42, "policy"), b(42, "policy");
  const auto batch_a = buffer.sample(8, a);
  const auto batch_b = buffer.sample(8, b);
  for (std::size_t i = 0; i < batch_a.size(); ++i) CHECK(batch_a[i] == batch_b[i]);
}

TEST_CASE("linear-q semi-gradient matches central finite differences") {
  TileCoder coder({{-1.0, 1.0}, {-1.0, 1.0}}, 4, 4);
  LinearQFunction fn(coder, 2);
  LearnerConfig cfg;
  cfg.gamma = 0.9;
  cfg.alpha = 0.1;

  RngStream stream(4242, "grad");
  for (int trial = 0; trial < 20; ++trial) {
    Observation s{{stream.next_uniform() * 2 - 1, stream.next_uniform() * 2 - 1}, "", "toy"};
    Observation n{{stream.next_uniform() * 2 - 1, stream.next_uniform() * 2 - 1}, "", "toy"};
    const int action = stream.next_int(2);
    const double reward = stream.next_gaussian(0.0, 1.0);
    const bool done = stream.next_uniform() < 0.3;
    const Transition t = Transition::make(s, action, reward, 0, 1.0, n, done);

    // seed some nonzero weights
    for (int a = 0; a < 2; ++a) {
      for (double& w : fn.weights(a)) w = stream.next_gaussian(0.0, 0.1);
    }

    // semi-gradient target is held fixed while differentiating
    const double target =
        t.reward + (t.done ? 0.0 : cfg.gamma * fn.max_value(t.next_state.box));
    const auto active = coder.active_features(t.state.box);

    const double h = 1e-6;
    for (int f : active) {
      auto loss = [&](double delta_w) {
        fn.weights(action)[static_cast<std::size_t>(f)] += delta_w;
        const double err = target - fn.value(t.state.box, action);
        fn.weights(action)[static_cast<std::size_t>(f)] -= delta_w;
        return 0.5 * err * err;
      };
      const double numeric = (loss(h) - loss(-h)) / (2.0 * h);
      const double analytic = -(target - fn.value(t.state.box, action));  // d/dw of 0.5 err^2
      CHECK(std::abs(numeric - analytic) <= 1e-5 * std::max(1.0, std::abs(analytic)));
    }

    // and the update moves each active weight by exactly alpha * delta
    const double before = fn.value(t.state.box, action);
    const double expected_step = cfg.alpha.value() * (target - before);
    std::vector<double> old_weights;
    for (int f : active) old_weights.push_back(fn.weights(action)[static_cast<std::size_t>(f)]);
    fn.td_update(t, cfg);
    for (std::size_t i = 0; i < active.size(); ++i) {
      CHECK(fn.weights(action)[static_cast<std::size_t>(active[i])] ==
            doctest::Approx(old_weights[i] + expected_step).epsilon(1e-12));
    }
  }
}

TEST_CASE("linear-q dimension mismatch is an argument error") {
  TileCoder coder({{-1.0, 1.0}, {-1.0, 1.0}}, 4, 4);
  LinearQFunction fn(coder, 2);
  CHECK_THROWS_AS(fn.value({0.5}, 0), std::invalid_argument);
}

TEST_CASE("evaluation never writes: greedy_action leaves values untouched") {
  envs::BlackjackEnv env;
  LearnerSpec spec;
  auto learner = make_learner(spec, env);
  auto* td = dynamic_cast<TabularTDLearner*>(learner.get());
  RngStream stream(21, "policy");

  // train a little so the table is non-trivial
  RngStream env_stream(21, "env");
  for (int e = 0; e < 50; ++e) {
    Observation obs = env.reset(env_stream);
    while (true) {
      const int a = learner->select_action(obs, 0.5, stream);
      const StepResult r = env.step(a, env_stream);
      learner->observe(Transition::make(obs, a, r.intrinsic_reward, 0, 1.0, r.obs, r.done),
                       stream);
      obs = r.obs;
      if (r.done) break;
    }
    learner->end_episode();
  }

  std::ostringstream before;
  td->table().save(before, 0);
  for (int p = 4; p <= 21; ++p) {
    learner->greedy_action(env.reset_to(p, 5, false));
  }
  std::ostringstream after;
  td->table().save(after, 0);
  CHECK(before.str() == after.str());
}

TEST_CASE("qtable checkpoint round trip is bit exact") {
  QTable q(3, 0.125);
  RngStream stream(77, "fill");
  for (int i = 0; i < 200; ++i) {
    q.set_value(static_cast<StateKey>(stream.next_int(50)), stream.next_int(3),
                stream.next_gaussian(0.0, 100.0));
  }
  std::stringstream file;
  q.save(file, 0xabcdef);
  const QTable loaded = QTable::load(file, 0xabcdef);
  CHECK(q == loaded);

  std::stringstream file2;
  q.save(file2, 0xabcdef);
  CHECK_THROWS_AS(QTable::load(file2, 0x123), std::runtime_error);
}

TEST_CASE("learner save/load round trip preserves greedy behavior") {
  envs::CartPoleEnv env;
  LearnerSpec spec;
  spec.algo = "linearq";
  auto learner = make_learner(spec, env);
  auto* lq = dynamic_cast<LinearQLearner*>(learner.get());
  RngStream stream(31, "policy");
  RngStream env_stream(31, "env");
  Observation obs = env.reset(env_stream);
  for (int i = 0; i < 200; ++i) {
    const int a = learner->select_action(obs, 0.3, stream);
    const StepResult r = env.step(a, env_stream);
    learner->observe(Transition::make(obs, a, r.intrinsic_reward, 0, 1.0, r.obs, r.done), stream);
    obs = r.obs;
    if (r.done) obs = env.reset(env_stream);
  }

  std::stringstream file;
  learner->save(file);
  auto restored = make_learner(spec, env);
  restored->load(file);
  CHECK(dynamic_cast<LinearQLearner*>(restored.get())->function().weights_equal(lq->function()));
}

TEST_CASE("constant shift acts like a shifted Q-initialization") {
  // On a zero-intrinsic-reward MDP, adding a constant shift c to every
  // reward is equivalent to lowering the initial Q by c / (1 - gamma):
  // the two tables stay a uniform offset apart for the whole run, so the
  // greedy policies coincide at every step.
  const double gamma = 0.8;
  const double c = 1.0;
  const double offset = c / (1.0 - gamma);

  LearnerConfig cfg;
  cfg.gamma = gamma;
  cfg.alpha = 0.2;

  QTable shifted(3, 0.0);          // learns from rewards 0 + c
  QTable preinitialized(3, -offset);  // learns from plain zero rewards

  RngStream stream(55, "probe");
  for (int step = 0; step < 20000; ++step) {
    const int s = stream.next_int(4);
    const int a = stream.next_int(3);
    const int next = stream.next_int(4);
    const Transition with_shift =
        Transition::make(make_obs(s), a, 0.0, 1, c, make_obs(next), false);
    const Transition without =
        Transition::make(make_obs(s), a, 0.0, 0, c, make_obs(next), false);
    td_update(shifted, {with_shift}, cfg, toy_key());
    td_update(preinitialized, {without}, cfg, toy_key());

    if (step % 500 == 0) {
      for (int check_s = 0; check_s < 4; ++check_s) {
        const auto key = static_cast<StateKey>(check_s);
        for (int check_a = 0; check_a < 3; ++check_a) {
          CHECK(std::abs(shifted.value(key, check_a) -
                         (preinitialized.value(key, check_a) + offset)) < 1e-9);
        }
        // greedy policies agree wherever the argmax is not a float-level tie
        const int best = shifted.greedy_action(key);
        bool tie = false;
        for (int other = 0; other < 3; ++other) {
          if (other != best &&
              std::abs(shifted.value(key, other) - shifted.value(key, best)) < 1e-9) {
            tie = true;
          }
        }
        if (!tie) CHECK(shifted.greedy_action(key) == preinitialized.greedy_action(key));
      }
    }
  }
}

TEST_CASE("slateq greedy packing and itemwise updates") {
  envs::ChocKaleEnv env;
  const SlateSpec& spec = *env.slate_spec();

  SUBCASE("cold start packs the first items by tie-break") {
    SlateQFunction fn(spec, 0.0);
    CHECK(fn.greedy_slate_action(0) == spec.action_for({0, 1}));
  }

  SUBCASE("packing follows item values once they separate") {
    SlateQFunction fn(spec, 0.0);
    fn.items().set_value(0, 5, 10.0);
    fn.items().set_value(0, 6, 9.0);
    const auto& picked = spec.slate_for(fn.greedy_slate_action(0));
    CHECK(picked == std::vector<int>{5, 6});
  }

  SUBCASE("update distributes the shaped reward by choice probability") {
    SlateQFunction fn(spec, 0.0);
    LearnerConfig cfg;
    cfg.gamma = 0.0;
    cfg.alpha = 1.0;
    const int action = spec.action_for({0, 9});
    Observation s{{0.1}, "s", "chockale"};
    Observation n{{0.1}, "n", "chockale"};
    const Transition t = Transition::make(s, action, 4.0, 0, 1.0, n, true);
    const StateKeyFn key = [&env](const Observation& o) { return env.state_key(o); };
    fn.itemwise_update(t, cfg, key);
    const double w0 = spec.choice_weight(0);
    const double w9 = spec.choice_weight(9);
    const StateKey k = key(s);
    CHECK(fn.items().value(k, 0) == doctest::Approx(4.0 * w0 / (w0 + w9)));
    CHECK(fn.items().value(k, 9) == doctest::Approx(4.0 * w9 / (w0 + w9)));
    CHECK(fn.items().value(k, 5) == 0.0);
  }
}

TEST_CASE("learner factory rejects mismatched algorithms") {
  envs::BlackjackEnv blackjack;
  LearnerSpec spec;
  spec.algo = "linearq";
  CHECK_THROWS_AS(make_learner(spec, blackjack), std::invalid_argument);
  spec.algo = "slateq";
  CHECK_THROWS_AS(make_learner(spec, blackjack), std::invalid_argument);
  spec.algo = "nonsense";
  CHECK_THROWS_AS(make_learner(spec, blackjack), std::invalid_argument);
}
