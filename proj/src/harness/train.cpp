#include "rglab/harness/train.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <thread>

namespace rglab::harness {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(Clock::now() -
                                                                                start)
      .count();
}

}  // namespace

void RunConfig::validate() const {
  std::string message;
  auto complain = [&message](const std::string& what) {
    message += (message.empty() ? "" : "; ") + what;
  };
  if (name.empty()) complain("run name is empty");
  if (env.name.empty()) complain("env name is empty");
  if (episodes < 1) complain("episodes < 1");
  if (max_steps < 1) complain("max_steps < 1");
  if (eval_episodes < 0) complain("eval_episodes < 0");
  if (seeds.empty()) complain("seed list is empty");
  for (std::size_t i = 1; i < checkpoints.size(); ++i) {
    if (checkpoints[i] <= checkpoints[i - 1]) {
      complain("checkpoints not strictly increasing");
      break;
    }
  }
  if (!checkpoints.empty() && checkpoints.front() < 1) complain("checkpoint before step 1");
  if (threshold.enabled && (threshold.window < 1 || threshold.value <= 0.0)) {
    complain("bad threshold spec");
  }
  if (evaluator.scale < 0.0) complain("negative shift scale");
  if (evaluator.scale_decay_steps < 0) complain("negative scale_decay_steps");
  if (!message.empty()) throw std::invalid_argument("run config '" + name + "': " + message);
}

double evaluate_policy(const learners::Learner& learner, Environment& env, int episodes,
                       long max_steps, RngStream& stream, double* stddev_out) {
  if (episodes <= 0) {
    if (stddev_out) *stddev_out = 0.0;
    return 0.0;
  }
  double sum = 0.0, sum_sq = 0.0;
  for (int e = 0; e < episodes; ++e) {
    Observation obs = env.reset(stream);
    double episode_return = 0.0;
    for (long s = 0; s < max_steps; ++s) {
      const int action = learner.greedy_action(obs);
      StepResult result = env.step(action, stream);
      episode_return += result.intrinsic_reward;
      obs = std::move(result.obs);
      if (result.done) break;
    }
    sum += episode_return;
    sum_sq += episode_return * episode_return;
  }
  const double mean = sum / episodes;
  if (stddev_out) {
    const double variance = std::max(0.0, sum_sq / episodes - mean * mean);
    *stddev_out = std::sqrt(variance);
  }
  return mean;
}

RunRecord train_run(const RunConfig& cfg, std::uint64_t seed) {
  auto env_for_evaluator = envs::make_env(cfg.env);
  auto evaluator = guidance::make_evaluator(cfg.evaluator, *env_for_evaluator);
  // The evaluator binds to this env instance for action names and task
  // cards only; the training loop drives its own instance.
  RunRecord record = train_run(cfg, seed, evaluator.get());
  return record;
}

RunRecord train_run(const RunConfig& cfg, std::uint64_t seed, guidance::Evaluator* evaluator) {
  cfg.validate();
  const auto start = Clock::now();

  auto env = envs::make_env(cfg.env);
  auto eval_env = envs::make_env(cfg.env);
  auto learner = learners::make_learner(cfg.learner, *env);

  RngStream env_stream(seed, "env");
  RngStream policy_stream(seed, "policy");
  RngStream eval_stream(seed, "eval-env");

  learners::EpsilonSchedule epsilon = cfg.learner.config.epsilon;
  if (epsilon.decay_steps <= 0) {
    epsilon.decay_steps = std::max<long>(1, cfg.episodes * cfg.max_steps / 5);
  }

  RunRecord record;
  record.run_name = cfg.name;
  record.env_id = env->env_id();
  record.evaluator_kind =
      evaluator ? guidance::evaluator_kind_name(evaluator->kind()) : "detached";
  record.learner_algo = cfg.learner.algo;
  record.seed = seed;
  record.shift_scale = cfg.evaluator.scale;
  record.scale_decay_steps = cfg.evaluator.scale_decay_steps;
  record.threshold_configured = cfg.threshold.enabled;

  long global_step = 0;
  std::size_t next_checkpoint = 0;
  std::deque<double> success_window;
  double success_sum = 0.0;

  auto emit_checkpoint = [&](long episodes_done) {
    CheckpointRecord c;
    c.step = cfg.checkpoints[next_checkpoint];
    c.episodes_completed = episodes_done;
    c.eval_episodes = cfg.eval_episodes;
    c.mean_return = evaluate_policy(*learner, *eval_env, cfg.eval_episodes, cfg.max_steps,
                                    eval_stream, &c.stddev_return);
    if (evaluator) {
      c.evaluator_queries = evaluator->stats().queries;
      c.evaluator_failures = evaluator->stats().failures;
      c.cache_hits = evaluator->stats().cache_hits;
    }
    c.wall_ms = elapsed_ms(start);
    record.checkpoints.push_back(c);
    ++next_checkpoint;
  };

  for (long episode = 0; episode < cfg.episodes; ++episode) {
    Observation obs = env->reset(env_stream);
    double intrinsic_return = 0.0;
    long steps = 0;

    for (long s = 0; s < cfg.max_steps; ++s) {
      const double eps = epsilon.value(global_step);
      const int action = learner->select_action(obs, eps, policy_stream);
      StepResult result = env->step(action, env_stream);

      int shift = 0;
      if (evaluator) shift = evaluator->evaluate(obs, action).shift;

      Transition t = Transition::make(obs, action, result.intrinsic_reward, shift,
                                      cfg.evaluator.scale_at(global_step), result.obs,
                                      result.done);
      learner->observe(t, policy_stream);
      if (cfg.record_transitions) record.transitions.push_back(t);

      intrinsic_return += result.intrinsic_reward;
      ++steps;
      ++global_step;

      if (next_checkpoint < cfg.checkpoints.size() &&
          global_step == cfg.checkpoints[next_checkpoint]) {
        emit_checkpoint(episode);
      }

      obs = std::move(result.obs);
      if (result.done) break;
    }

    learner->end_episode();
    record.episode_returns.push_back(intrinsic_return);
    record.episode_steps.push_back(steps);

    if (auto success = env->episode_success()) {
      record.episode_success.push_back(*success);
      if (cfg.threshold.enabled && record.episodes_to_threshold == kThresholdNotReached) {
        success_window.push_back(*success);
        success_sum += *success;
        if (success_window.size() > static_cast<std::size_t>(cfg.threshold.window)) {
          success_sum -= success_window.front();
          success_window.pop_front();
        }
        if (success_window.size() == static_cast<std::size_t>(cfg.threshold.window) &&
            success_sum / cfg.threshold.window >= cfg.threshold.value) {
          record.episodes_to_threshold = episode + 1;
        }
      }
    }

    if (cfg.stop_after_goals && next_checkpoint >= cfg.checkpoints.size() &&
        (!cfg.threshold.enabled || record.episodes_to_threshold != kThresholdNotReached)) {
      break;
    }
  }

  record.total_steps = global_step;
  record.total_episodes = static_cast<long>(record.episode_returns.size());
  record.wall_ms = elapsed_ms(start);
  return record;
}

std::vector<RunRecord> train_all_seeds(const RunConfig& cfg, int jobs) {
  cfg.validate();
  std::vector<RunRecord> records(cfg.seeds.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < cfg.seeds.size(); ++i) {
      records[i] = train_run(cfg, cfg.seeds[i]);
    }
    return records;
  }
  std::vector<std::thread> workers;
  std::atomic<std::size_t> next{0};
  const int worker_count = std::min<int>(jobs, static_cast<int>(cfg.seeds.size()));
  for (int w = 0; w < worker_count; ++w) {
    workers.emplace_back([&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= cfg.seeds.size()) return;
        records[i] = train_run(cfg, cfg.seeds[i]);
      }
    });
  }
  for (auto& t : workers) t.join();
  return records;
}

long episodes_to_threshold(const std::vector<double>& success, const ThresholdSpec& threshold) {
  if (!threshold.enabled || threshold.window < 1) return kThresholdNotReached;
  std::deque<double> window;
  double sum = 0.0;
  for (std::size_t i = 0; i < success.size(); ++i) {
    window.push_back(success[i]);
    sum += success[i];
    if (window.size() > static_cast<std::size_t>(threshold.window)) {
      sum -= window.front();
      window.pop_front();
    }
    if (window.size() == static_cast<std::size_t>(threshold.window) &&
        sum / threshold.window >= threshold.value) {
      return static_cast<long>(i) + 1;
    }
  }
  return kThresholdNotReached;
}

std::vector<BoostRow> boosted_reward(const std::vector<RunRecord>& guided,
                                     const std::vector<RunRecord>& baseline) {
  if (guided.empty() || guided.size() != baseline.size()) {
    throw std::invalid_argument("boosted_reward: seed lists differ");
  }
  const std::size_t n_checkpoints = guided.front().checkpoints.size();
  for (const auto& records : {&guided, &baseline}) {
    for (const RunRecord& r : *records) {
      if (r.checkpoints.size() != n_checkpoints) {
        throw std::invalid_argument("boosted_reward: mismatched checkpoints");
      }
      for (std::size_t c = 0; c < n_checkpoints; ++c) {
        if (r.checkpoints[c].step != guided.front().checkpoints[c].step) {
          throw std::invalid_argument("boosted_reward: mismatched checkpoints");
        }
      }
    }
  }
  for (std::size_t i = 0; i < guided.size(); ++i) {
    if (guided[i].seed != baseline[i].seed) {
      throw std::invalid_argument("boosted_reward: seed lists differ");
    }
  }

  std::vector<BoostRow> rows;
  for (std::size_t c = 0; c < n_checkpoints; ++c) {
    BoostRow row;
    row.step = guided.front().checkpoints[c].step;
    for (std::size_t i = 0; i < guided.size(); ++i) {
      const double g = guided[i].checkpoints[c].mean_return;
      const double b = baseline[i].checkpoints[c].mean_return;
      row.guided_mean += g;
      row.baseline_mean += b;
      row.per_seed_delta.push_back(g - b);
    }
    row.guided_mean /= static_cast<double>(guided.size());
    row.baseline_mean /= static_cast<double>(baseline.size());
    row.boost = row.guided_mean - row.baseline_mean;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace rglab::harness
