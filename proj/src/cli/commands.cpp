#include "rglab/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rglab/cli/manifest.hpp"
#include "rglab/cli/report.hpp"
#include "rglab/core/format.hpp"
#include "rglab/envs/blackjack.hpp"
#include "rglab/envs/cartpole.hpp"
#include "rglab/envs/choc_kale.hpp"
#include "rglab/envs/watch_repair.hpp"
#include "rglab/guidance/blackjack_oracle.hpp"
#include "rglab/harness/train.hpp"

namespace rglab::cli {

namespace fs = std::filesystem;

int cmd_run(const RunOptions& options) {
  ExperimentManifest manifest;
  try {
    manifest = load_manifest(options.manifest_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (options.seeds_override) {
    manifest.seeds = *options.seeds_override;
    for (auto& run : manifest.runs) run.seeds = manifest.seeds;
  }
  if (options.output_dir_override) manifest.output_dir = *options.output_dir_override;
  if (options.evaluator_override) {
    try {
      const auto kind = guidance::evaluator_kind_from(*options.evaluator_override);
      for (auto& run : manifest.runs) run.evaluator.kind = kind;
    } catch (const std::invalid_argument& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
  }
  if (options.endpoint_config_path) {
    try {
      const auto endpoint = load_endpoint_config(*options.endpoint_config_path);
      for (auto& run : manifest.runs) run.evaluator.endpoint = endpoint;
    } catch (const std::invalid_argument& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
  }

  const std::string records_dir = (fs::path(manifest.output_dir) / "records").string();
  for (const auto& run_cfg : manifest.runs) {
    std::cout << "run '" << run_cfg.name << "' (" << run_cfg.env.name << ", "
              << run_cfg.learner.algo << ", evaluator "
              << guidance::evaluator_kind_name(run_cfg.evaluator.kind) << ")\n";
    std::vector<harness::RunRecord> records;
    try {
      records = harness::train_all_seeds(run_cfg, options.jobs);
    } catch (const std::exception& e) {
      std::cerr << "run '" << run_cfg.name << "' failed: " << e.what() << "\n";
      return 1;
    }
    for (const auto& record : records) {
      write_record(records_dir, record);
      std::cout << "  seed " << record.seed << ": " << record.total_episodes << " episodes, "
                << record.total_steps << " steps";
      if (!record.checkpoints.empty()) {
        std::cout << ", eval at n=" << record.checkpoints.back().step << ": "
                  << format_fixed(record.checkpoints.back().mean_return, 4);
      }
      if (record.threshold_configured) {
        if (record.episodes_to_threshold == harness::kThresholdNotReached) {
          std::cout << ", threshold not reached";
        } else {
          std::cout << ", threshold at episode " << record.episodes_to_threshold;
        }
      }
      std::cout << "\n";
    }
  }

  const std::string reports_dir = (fs::path(manifest.output_dir) / "reports").string();
  const ReportResult report = write_reports(records_dir, reports_dir, manifest.pairings);
  std::cout << report.files_written.size() << " report file(s) under " << reports_dir << "\n";
  for (const auto& missing : report.incomplete_pairings) {
    std::cout << "incomplete pairing: " << missing << "\n";
  }

  // Threshold summary table across runs, when any run tracks one.
  bool any_threshold = false;
  for (const auto& run_cfg : manifest.runs) any_threshold |= run_cfg.threshold.enabled;
  if (any_threshold) {
    std::cout << "\nepisodes-to-threshold per method (mean over seeds):\n";
    auto records = load_records(records_dir);
    for (const auto& run_cfg : manifest.runs) {
      long sum = 0;
      int reached = 0, total = 0;
      for (const auto& record : records) {
        if (record.run_name != run_cfg.name) continue;
        ++total;
        if (record.episodes_to_threshold != harness::kThresholdNotReached) {
          ++reached;
          sum += record.episodes_to_threshold;
        }
      }
      std::cout << "  " << run_cfg.name << ": ";
      if (reached == 0) {
        std::cout << "not reached\n";
      } else {
        std::cout << format_fixed(static_cast<double>(sum) / reached, 1) << " (" << reached << "/"
                  << total << " seeds)\n";
      }
    }
  }
  return 0;
}

int cmd_report(const std::string& records_dir, const std::string& manifest_path) {
  std::vector<ExperimentManifest::Pairing> pairings;
  if (!manifest_path.empty()) {
    try {
      pairings = load_manifest(manifest_path).pairings;
    } catch (const std::invalid_argument& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
  }
  const auto records = load_records(records_dir);
  if (records.empty()) {
    std::cerr << "no run records under '" << records_dir << "'\n";
    return 1;
  }
  const std::string reports_dir =
      (fs::path(records_dir).parent_path() / "reports").string();
  const ReportResult result = write_reports(records_dir, reports_dir, pairings);
  std::cout << result.files_written.size() << " report file(s) under " << reports_dir << "\n";
  for (const auto& missing : result.incomplete_pairings) {
    std::cout << "incomplete pairing: " << missing << "\n";
  }
  return 0;
}

int cmd_oracle_dump(const std::string& env_name, const std::string& out_path) {
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write '" << out_path << "'\n";
    return 1;
  }

  if (env_name == "blackjack") {
    const auto table = guidance::BasicStrategyTable::build();
    out << "player_sum,usable_ace,dealer_up,q_stick,q_hit,optimal,gap\n";
    for (const auto& cell : table.all_cells()) {
      const auto& c = table.cell(cell.player_sum, cell.usable_ace, cell.dealer_up);
      out << cell.player_sum << "," << (cell.usable_ace ? 1 : 0) << "," << cell.dealer_up << ","
          << format_fixed(c.q_stick, 6) << "," << format_fixed(c.q_hit, 6) << ","
          << (c.optimal_action() == 1 ? "hit" : "stick") << "," << format_fixed(c.gap(), 6)
          << "\n";
    }
    std::cout << "blackjack strategy grid -> " << out_path << "\n";
    return 0;
  }
  if (env_name == "watchrepair") {
    envs::WatchRepairEnv env;
    out << "brand,sell_price,expected_step_cost,expected_duration,expected_total_cost,"
           "expected_profit,oracle_verdict_on_repair\n";
    for (int b = 0; b < env.brand_count(); ++b) {
      const double profit = env.expected_profit(b);
      const double margin = 0.1 * env.config().brands[static_cast<std::size_t>(b)].sell_price;
      const char* verdict = profit > margin ? "+1" : (profit < -margin ? "-1" : "0");
      out << b << "," << format_fixed(env.config().brands[static_cast<std::size_t>(b)].sell_price, 2)
          << "," << format_fixed(env.expected_step_cost(b), 6) << ","
          << format_fixed(env.expected_duration(b), 6) << ","
          << format_fixed(env.expected_total_cost(b), 6) << "," << format_fixed(profit, 6) << ","
          << verdict << "\n";
    }
    std::cout << "watch-repair brand table -> " << out_path << "\n";
    return 0;
  }
  if (env_name == "cartpole") {
    out << "rule,parameter,value\n";
    out << "fall_side,definition,theta + 0.5*theta_dot\n";
    out << "dead_band,radians," << format_fixed(0.01, 4) << "\n";
    out << "approve,push toward fall side,+1\n";
    out << "disapprove,push away from fall side,-1\n";
    std::cout << "cartpole rule card -> " << out_path << "\n";
    return 0;
  }
  if (env_name == "chockale") {
    envs::ChocKaleEnv env;
    out << "rule,low,high\n";
    out << "healthy_mean_kaleness," << format_fixed(0.4, 2) << "," << format_fixed(0.7, 2) << "\n";
    out << "chocolate_binge_mean_kaleness,0," << format_fixed(0.2, 2) << "\n";
    out << "low_satisfaction_gate,0," << format_fixed(0.5, 2) << "\n";
    out << "doc_id,kaleness,\n";
    for (const auto& doc : env.documents()) {
      out << doc.doc_id << "," << format_fixed(doc.kaleness, 4) << ",\n";
    }
    std::cout << "chockale rule card -> " << out_path << "\n";
    return 0;
  }
  std::cerr << "no oracle for environment '" << env_name << "'\n";
  return 2;
}

int cmd_validate(const std::string& manifest_path) {
  try {
    const ExperimentManifest manifest = load_manifest(manifest_path);
    std::cout << "manifest ok: " << manifest.runs.size() << " run(s), "
              << manifest.pairings.size() << " pairing(s), " << manifest.seeds.size()
              << " seed(s)\n";
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}


namespace {

std::string bool_name(bool v) { return v ? "true" : "false"; }

}  // namespace

std::string config_reference_text() {
  const harness::RunConfig run;
  const learners::LearnerConfig learner;
  const guidance::EvaluatorSpec evaluator;
  const llm::EndpointConfig endpoint;
  const envs::CartPoleConfig cartpole;
  const envs::ChocKaleConfig chockale;
  const envs::WatchRepairConfig watch{envs::default_watch_brands(), 10};

  std::ostringstream out;
  out << "# Manifest reference\n\n"
      << "Generated by `rglab config-reference`. A manifest is a JSON object; unknown keys\n"
      << "anywhere are rejected with their location. Values below are the built-in defaults\n"
      << "that apply when a key is omitted.\n\n";

  out << "## Top level\n\n"
      << "| key | type | default |\n| --- | --- | --- |\n"
      << "| output_dir | string | \"out\" |\n"
      << "| seeds | array of integers | [42, 43, 44, 45, 46] |\n"
      << "| runs | array of run objects | required |\n"
      << "| pairings | array of {guided, baseline} run names | [] |\n\n";

  out << "## Run object\n\n"
      << "| key | type | default |\n| --- | --- | --- |\n"
      << "| name | string | \"" << run.name << "\" |\n"
      << "| env | object {name, params} | required |\n"
      << "| learner | learner object | see below |\n"
      << "| evaluator | evaluator object | see below |\n"
      << "| episodes | integer (N, training episodes) | " << run.episodes << " |\n"
      << "| max_steps | integer (M, step cap per episode) | " << run.max_steps << " |\n"
      << "| checkpoints | array of global env steps, strictly increasing | [100, 1000, 10000] |\n"
      << "| eval_episodes | integer (greedy rollouts per checkpoint) | " << run.eval_episodes
      << " |\n"
      << "| threshold | object {value, window}; present enables the rolling metric | off"
      << " (value " << run.threshold.value << ", window " << run.threshold.window
      << " when enabled) |\n"
      << "| stop_after_goals | boolean (stop once checkpoints and threshold are done) | "
      << bool_name(run.stop_after_goals) << " |\n"
      << "| record_transitions | boolean (keep the full transition log in memory) | "
      << bool_name(run.record_transitions) << " |\n\n";

  out << "## Learner object\n\n"
      << "| key | type | default |\n| --- | --- | --- |\n"
      << "| algo | td \\| mc \\| linearq \\| slateq | \"td\" |\n"
      << "| gamma | number | " << learner.gamma << " |\n"
      << "| alpha | number | 0.1 tabular, 0.5 / num_tilings linear |\n"
      << "| q_init | number | " << learner.q_init << " |\n"
      << "| batch_size | integer | " << learner.batch_size << " |\n"
      << "| buffer_capacity | integer | " << learner.buffer_capacity << " |\n"
      << "| epsilon.start | number | " << learner.epsilon.start << " |\n"
      << "| epsilon.end | number | " << learner.epsilon.end << " |\n"
      << "| epsilon.decay_steps | integer; 0 = 20% of episodes x max_steps | "
      << learner.epsilon.decay_steps << " |\n\n";

  out << "## Evaluator object\n\n"
      << "| key | type | default |\n| --- | --- | --- |\n"
      << "| kind | null \\| scripted \\| llm | \"null\" |\n"
      << "| scale | number (shift magnitude) | " << evaluator.scale << " |\n"
      << "| scale_decay_steps | integer; linear decay of the applied scale to zero, 0 = "
         "constant | " << evaluator.scale_decay_steps << " |\n"
      << "| cache_enabled | boolean | " << bool_name(evaluator.cache_enabled) << " |\n"
      << "| cache_path | string; empty keeps the cache in memory | \"\" |\n"
      << "| prompt | prompt object (llm kind) | see below |\n"
      << "| endpoint | endpoint object (llm kind) | see below |\n\n";

  out << "## Prompt object\n\n"
      << "| key | type | default |\n| --- | --- | --- |\n"
      << "| strategies | array over cot, zero_shot, few_shot, name | [] |\n"
      << "| persona | string (required by name) | \"\" |\n"
      << "| prior_knowledge | string; non-empty makes the prompt knowledge-inclusive | \"\" |\n"
      << "| env_card | string; empty uses the environment's own task card | \"\" |\n"
      << "| examples | array of {user, assistant} (required by few_shot) | [] |\n"
      << "| response_contract | string | final line \"SCORE: <-1|0|1>\" instruction |\n\n";

  out << "## Endpoint object\n\n"
      << "| key | type | default |\n| --- | --- | --- |\n"
      << "| base_url | string | \"" << endpoint.base_url << "\" |\n"
      << "| model | string | \"" << endpoint.model << "\" |\n"
      << "| temperature | number | " << endpoint.temperature << " |\n"
      << "| top_p | number | " << endpoint.top_p << " |\n"
      << "| repetition_penalty | number | " << endpoint.repetition_penalty << " |\n"
      << "| top_k | integer | " << endpoint.top_k << " |\n"
      << "| max_tokens | integer | " << endpoint.max_tokens << " |\n"
      << "| timeout_ms | integer | " << endpoint.timeout_ms << " |\n"
      << "| max_retries | integer | " << endpoint.max_retries << " |\n"
      << "| auth_env_var | string (bearer token env variable) | \"" << endpoint.auth_env_var
      << "\" |\n\n";

  out << "## Environment params\n\n### cartpole\n\n"
      << "| key | default |\n| --- | --- |\n"
      << "| gravity | " << cartpole.gravity << " |\n"
      << "| cart_mass | " << cartpole.cart_mass << " |\n"
      << "| pole_mass | " << cartpole.pole_mass << " |\n"
      << "| half_length | " << cartpole.half_length << " |\n"
      << "| force_mag | " << cartpole.force_mag << " |\n"
      << "| dt | " << cartpole.dt << " |\n"
      << "| x_limit | " << cartpole.x_limit << " |\n"
      << "| theta_limit_deg | " << cartpole.theta_limit_deg << " |\n"
      << "| max_steps | " << cartpole.max_steps << " |\n"
      << "| reset_span | " << cartpole.reset_span << " |\n\n";

  out << "### blackjack\n\nNo tunables (infinite deck, dealer stands on every 17, hit/stick "
         "only, naturals pay +1).\n\n";

  out << "### watchrepair\n\n"
      << "| key | default |\n| --- | --- |\n"
      << "| max_repair_steps | " << watch.max_repair_steps << " |\n"
      << "| brands | 8 built-in brands (see below); each entry takes sell_price, cost_mean, "
         "cost_stddev, completion_prob |\n\n"
      << "| brand | sell_price | cost_mean | cost_stddev | completion_prob |\n"
      << "| --- | --- | --- | --- | --- |\n";
  for (std::size_t b = 0; b < watch.brands.size(); ++b) {
    const auto& brand = watch.brands[b];
    out << "| " << b << " | " << brand.sell_price << " | " << brand.cost_mean << " | "
        << brand.cost_stddev << " | " << brand.completion_prob << " |\n";
  }
  out << "\n### chockale\n\n"
      << "| key | default |\n| --- | --- |\n"
      << "| num_docs | " << chockale.num_docs << " |\n"
      << "| slate_size | " << chockale.slate_size << " |\n"
      << "| tau | " << chockale.tau << " |\n"
      << "| beta | " << chockale.beta << " |\n"
      << "| eta | " << chockale.eta << " |\n"
      << "| mu_kale | " << chockale.mu_kale << " |\n"
      << "| sigma_kale | " << chockale.sigma_kale << " |\n"
      << "| mu_choc | " << chockale.mu_choc << " |\n"
      << "| sigma_choc | " << chockale.sigma_choc << " |\n"
      << "| initial_budget | " << chockale.initial_budget << " |\n"
      << "| session_cost | " << chockale.session_cost << " |\n"
      << "| satisfaction_bonus | " << chockale.satisfaction_bonus << " |\n"
      << "| observation_noise | " << chockale.observation_noise << " |\n";
  return out.str();
}

int cmd_config_reference(const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << config_reference_text();
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write '" << out_path << "'\n";
    return 1;
  }
  out << config_reference_text();
  std::cout << "manifest reference -> " << out_path << "\n";
  return 0;
}

}  // namespace rglab::cli
