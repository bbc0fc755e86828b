#include "rglab/harness/run_record.hpp"

#include <cmath>
#include <ostream>

namespace rglab::harness {

using nlohmann::json;

namespace {

json checkpoint_to_json(const CheckpointRecord& c) {
  return {{"step", c.step},
          {"episodes_completed", c.episodes_completed},
          {"mean_return", c.mean_return},
          {"stddev_return", c.stddev_return},
          {"eval_episodes", c.eval_episodes},
          {"evaluator_queries", c.evaluator_queries},
          {"evaluator_failures", c.evaluator_failures},
          {"cache_hits", c.cache_hits},
          {"wall_ms", c.wall_ms}};
}

CheckpointRecord checkpoint_from_json(const json& j) {
  CheckpointRecord c;
  c.step = j.at("step").get<long>();
  c.episodes_completed = j.at("episodes_completed").get<long>();
  c.mean_return = j.at("mean_return").get<double>();
  c.stddev_return = j.at("stddev_return").get<double>();
  c.eval_episodes = j.at("eval_episodes").get<int>();
  c.evaluator_queries = j.at("evaluator_queries").get<long>();
  c.evaluator_failures = j.at("evaluator_failures").get<long>();
  c.cache_hits = j.at("cache_hits").get<long>();
  c.wall_ms = j.at("wall_ms").get<double>();
  return c;
}

}  // namespace

json RunRecord::to_json() const {
  json j;
  j["run_name"] = run_name;
  j["env_id"] = env_id;
  j["evaluator_kind"] = evaluator_kind;
  j["learner_algo"] = learner_algo;
  j["seed"] = seed;
  j["shift_scale"] = shift_scale;
  j["scale_decay_steps"] = scale_decay_steps;
  j["checkpoints"] = json::array();
  for (const auto& c : checkpoints) j["checkpoints"].push_back(checkpoint_to_json(c));
  j["episode_returns"] = episode_returns;
  j["episode_steps"] = episode_steps;
  j["episode_success"] = episode_success;
  j["episodes_to_threshold"] = episodes_to_threshold;
  j["threshold_configured"] = threshold_configured;
  j["total_steps"] = total_steps;
  j["total_episodes"] = total_episodes;
  j["wall_ms"] = wall_ms;
  return j;
}

RunRecord RunRecord::from_json(const json& j) {
  RunRecord r;
  r.run_name = j.at("run_name").get<std::string>();
  r.env_id = j.at("env_id").get<std::string>();
  r.evaluator_kind = j.at("evaluator_kind").get<std::string>();
  r.learner_algo = j.at("learner_algo").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.shift_scale = j.at("shift_scale").get<double>();
  r.scale_decay_steps = j.at("scale_decay_steps").get<long>();
  for (const auto& c : j.at("checkpoints")) r.checkpoints.push_back(checkpoint_from_json(c));
  r.episode_returns = j.at("episode_returns").get<std::vector<double>>();
  r.episode_steps = j.at("episode_steps").get<std::vector<long>>();
  r.episode_success = j.at("episode_success").get<std::vector<double>>();
  r.episodes_to_threshold = j.at("episodes_to_threshold").get<long>();
  r.threshold_configured = j.at("threshold_configured").get<bool>();
  r.total_steps = j.at("total_steps").get<long>();
  r.total_episodes = j.at("total_episodes").get<long>();
  r.wall_ms = j.at("wall_ms").get<double>();
  return r;
}

void RunRecord::write_events(std::ostream& out) const {
  json header = {{"event", "run"},       {"run_name", run_name}, {"env_id", env_id},
                 {"evaluator_kind", evaluator_kind}, {"learner_algo", learner_algo},
                 {"seed", seed},         {"shift_scale", shift_scale}};
  out << header.dump() << "\n";
  std::size_t next_checkpoint = 0;
  long steps_so_far = 0;
  for (std::size_t i = 0; i < episode_returns.size(); ++i) {
    json e = {{"event", "episode"},
              {"index", i},
              {"intrinsic_return", episode_returns[i]},
              {"steps", episode_steps[i]}};
    if (i < episode_success.size()) e["success"] = episode_success[i];
    out << e.dump() << "\n";
    steps_so_far += episode_steps[i];
    while (next_checkpoint < checkpoints.size() &&
           checkpoints[next_checkpoint].step <= steps_so_far) {
      json c = checkpoint_to_json(checkpoints[next_checkpoint]);
      c["event"] = "checkpoint";
      out << c.dump() << "\n";
      ++next_checkpoint;
    }
  }
  json footer = {{"event", "summary"},
                 {"episodes_to_threshold", episodes_to_threshold},
                 {"total_steps", total_steps},
                 {"total_episodes", total_episodes}};
  out << footer.dump() << "\n";
}

bool RunRecord::same_results(const RunRecord& other) const {
  if (run_name != other.run_name || env_id != other.env_id ||
      evaluator_kind != other.evaluator_kind || learner_algo != other.learner_algo ||
      seed != other.seed || shift_scale != other.shift_scale ||
      scale_decay_steps != other.scale_decay_steps) {
    return false;
  }
  if (checkpoints.size() != other.checkpoints.size()) return false;
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    const auto& a = checkpoints[i];
    const auto& b = other.checkpoints[i];
    if (a.step != b.step || a.episodes_completed != b.episodes_completed ||
        a.mean_return != b.mean_return || a.stddev_return != b.stddev_return ||
        a.eval_episodes != b.eval_episodes || a.evaluator_queries != b.evaluator_queries ||
        a.evaluator_failures != b.evaluator_failures || a.cache_hits != b.cache_hits) {
      return false;
    }
  }
  return episode_returns == other.episode_returns && episode_steps == other.episode_steps &&
         episode_success == other.episode_success &&
         episodes_to_threshold == other.episodes_to_threshold &&
         threshold_configured == other.threshold_configured &&
         total_steps == other.total_steps && total_episodes == other.total_episodes &&
         transitions == other.transitions;
}

std::vector<std::string> audit_run(const RunRecord& record) {
  std::vector<std::string> violations;

  auto scale_at = [&record](std::size_t step) {
    if (record.scale_decay_steps <= 0) return record.shift_scale;
    if (static_cast<long>(step) >= record.scale_decay_steps) return 0.0;
    return record.shift_scale *
           (1.0 - static_cast<double>(step) / static_cast<double>(record.scale_decay_steps));
  };
  for (std::size_t i = 0; i < record.transitions.size(); ++i) {
    const Transition& t = record.transitions[i];
    if (t.shift < -1 || t.shift > 1) {
      violations.push_back("transition " + std::to_string(i) + ": shift outside {-1,0,+1}");
    }
    const double expected =
        t.shift == 0 ? t.intrinsic_reward : t.intrinsic_reward + t.shift * scale_at(i);
    if (t.reward != expected) {
      violations.push_back("transition " + std::to_string(i) +
                           ": reward != intrinsic + shift * scale");
    }
  }

  if (!record.transitions.empty()) {
    // Per-episode intrinsic sums must reproduce the reported returns.
    std::size_t cursor = 0;
    for (std::size_t e = 0; e < record.episode_steps.size(); ++e) {
      double sum = 0.0;
      for (long s = 0; s < record.episode_steps[e] && cursor < record.transitions.size(); ++s) {
        sum += record.transitions[cursor++].intrinsic_reward;
      }
      if (e < record.episode_returns.size() && record.episode_returns[e] != sum) {
        violations.push_back("episode " + std::to_string(e) +
                             ": reported return does not match intrinsic sum");
      }
    }
    if (cursor != record.transitions.size()) {
      violations.push_back("transition count does not match episode step counts");
    }
  }

  for (std::size_t i = 0; i < record.checkpoints.size(); ++i) {
    const auto& c = record.checkpoints[i];
    if (!std::isfinite(c.mean_return) || !std::isfinite(c.stddev_return)) {
      violations.push_back("checkpoint " + std::to_string(i) + ": non-finite statistic");
    }
  }
  return violations;
}

}  // namespace rglab::harness
