#include "rglab/learners/learner.hpp"

#include <sstream>
#include <stdexcept>

#include "rglab/envs/cartpole.hpp"

namespace rglab::learners {

namespace {

std::uint64_t hash_config(const std::string& algo, const LearnerConfig& cfg,
                          const std::string& env_id, int action_count) {
  std::ostringstream s;
  s << algo << '|' << env_id << '|' << action_count << '|' << cfg.gamma << '|'
    << cfg.alpha_or(-1.0) << '|' << cfg.q_init << '|' << cfg.batch_size << '|'
    << cfg.buffer_capacity;
  return fnv1a64(s.str());
}

}  // namespace

int Learner::select_action(const Observation& obs, double epsilon, RngStream& stream) const {
  if (epsilon > 0.0 && stream.next_uniform() < epsilon) return stream.next_int(action_count());
  return greedy_action(obs);
}

// ---- TabularTDLearner ----

TabularTDLearner::TabularTDLearner(LearnerConfig cfg, int action_count, StateKeyFn key,
                                   std::string env_id)
    : cfg_(cfg),
      key_(std::move(key)),
      env_id_(std::move(env_id)),
      table_(action_count, cfg.q_init),
      buffer_(cfg.buffer_capacity) {}

int TabularTDLearner::greedy_action(const Observation& obs) const {
  return table_.greedy_action(key_(obs));
}

void TabularTDLearner::observe(const Transition& t, RngStream& policy_stream) {
  buffer_.push(t);
  if (buffer_.size() >= static_cast<std::size_t>(cfg_.batch_size)) {
    td_update(table_, buffer_.sample(static_cast<std::size_t>(cfg_.batch_size), policy_stream),
              cfg_, key_);
  }
}

void TabularTDLearner::save(std::ostream& out) const { table_.save(out, config_hash()); }

void TabularTDLearner::load(std::istream& in) { table_ = QTable::load(in, config_hash()); }

std::uint64_t TabularTDLearner::config_hash() const {
  return hash_config("td", cfg_, env_id_, table_.action_count());
}

// ---- TabularMCLearner ----

TabularMCLearner::TabularMCLearner(LearnerConfig cfg, int action_count, StateKeyFn key,
                                   std::string env_id)
    : cfg_(cfg),
      key_(std::move(key)),
      env_id_(std::move(env_id)),
      table_(action_count, cfg.q_init) {}

int TabularMCLearner::greedy_action(const Observation& obs) const {
  return table_.greedy_action(key_(obs));
}

void TabularMCLearner::observe(const Transition& t, RngStream&) { episode_.push_back(t); }

void TabularMCLearner::end_episode() {
  if (!episode_.empty() && episode_.back().done) {
    mc_update(table_, episode_, cfg_, key_);
  }
  episode_.clear();
}

void TabularMCLearner::save(std::ostream& out) const { table_.save(out, config_hash()); }

void TabularMCLearner::load(std::istream& in) { table_ = QTable::load(in, config_hash()); }

std::uint64_t TabularMCLearner::config_hash() const {
  return hash_config("mc", cfg_, env_id_, table_.action_count());
}

// ---- LinearQLearner ----

LinearQLearner::LinearQLearner(LearnerConfig cfg, TileCoder coder, int action_count,
                               std::string env_id)
    : cfg_(cfg),
      env_id_(std::move(env_id)),
      fn_(std::move(coder), action_count, cfg.q_init),
      buffer_(cfg.buffer_capacity) {}

int LinearQLearner::greedy_action(const Observation& obs) const {
  return fn_.greedy_action(obs.box);
}

void LinearQLearner::observe(const Transition& t, RngStream& policy_stream) {
  buffer_.push(t);
  if (buffer_.size() >= static_cast<std::size_t>(cfg_.batch_size)) {
    fn_.td_batch_update(buffer_.sample(static_cast<std::size_t>(cfg_.batch_size), policy_stream),
                        cfg_);
  }
}

void LinearQLearner::save(std::ostream& out) const { fn_.save(out, config_hash()); }

void LinearQLearner::load(std::istream& in) {
  fn_ = LinearQFunction::load(in, config_hash(), fn_.coder());
}

std::uint64_t LinearQLearner::config_hash() const {
  return hash_config("linearq", cfg_, env_id_, fn_.action_count());
}

// ---- SlateQLearner ----

SlateQLearner::SlateQLearner(LearnerConfig cfg, SlateSpec spec, StateKeyFn key,
                             std::string env_id)
    : cfg_(cfg),
      key_(std::move(key)),
      env_id_(std::move(env_id)),
      fn_(std::move(spec), cfg.q_init),
      buffer_(cfg.buffer_capacity) {}

int SlateQLearner::greedy_action(const Observation& obs) const {
  return fn_.greedy_slate_action(key_(obs));
}

void SlateQLearner::observe(const Transition& t, RngStream& policy_stream) {
  buffer_.push(t);
  if (buffer_.size() >= static_cast<std::size_t>(cfg_.batch_size)) {
    fn_.itemwise_batch_update(
        buffer_.sample(static_cast<std::size_t>(cfg_.batch_size), policy_stream), cfg_, key_);
  }
}

void SlateQLearner::save(std::ostream& out) const { fn_.items().save(out, config_hash()); }

void SlateQLearner::load(std::istream& in) {
  fn_.items() = QTable::load(in, config_hash());
}

std::uint64_t SlateQLearner::config_hash() const {
  return hash_config("slateq", cfg_, env_id_, fn_.spec().action_count());
}

// ---- factory ----

std::unique_ptr<Learner> make_learner(const LearnerSpec& spec, const Environment& env) {
  StateKeyFn key = [&env](const Observation& obs) { return env.state_key(obs); };

  if (spec.algo == "td") {
    return std::make_unique<TabularTDLearner>(spec.config, env.action_count(), key, env.env_id());
  }
  if (spec.algo == "mc") {
    return std::make_unique<TabularMCLearner>(spec.config, env.action_count(), key, env.env_id());
  }
  if (spec.algo == "linearq") {
    const auto* cartpole = dynamic_cast<const envs::CartPoleEnv*>(&env);
    if (!cartpole) {
      throw std::invalid_argument("make_learner: linearq requires the cartpole environment");
    }
    const double tl = cartpole->theta_limit_rad();
    TileCoder coder({{-cartpole->config().x_limit, cartpole->config().x_limit},
                     {-3.0, 3.0},
                     {-tl, tl},
                     {-3.5, 3.5}},
                    8, 8);
    return std::make_unique<LinearQLearner>(spec.config, std::move(coder), env.action_count(),
                                            env.env_id());
  }
  if (spec.algo == "slateq") {
    const SlateSpec* slate = env.slate_spec();
    if (!slate) throw std::invalid_argument("make_learner: slateq requires a slate environment");
    return std::make_unique<SlateQLearner>(spec.config, *slate, key, env.env_id());
  }
  throw std::invalid_argument("make_learner: unknown algorithm '" + spec.algo + "'");
}

}  // namespace rglab::learners
