#include "rglab/cli/manifest.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace rglab::cli {

using nlohmann::json;

namespace {

// Walks one JSON object, checking types as fields are pulled out and
// reporting unknown keys with their full path.
class Checker {
 public:
  Checker(const json& node, std::string path, std::vector<std::string>& errors)
      : node_(node), path_(std::move(path)), errors_(errors) {
    if (!node_.is_object()) {
      errors_.push_back(path_ + ": expected an object");
      ok_ = false;
    }
  }

  bool ok() const { return ok_; }

  const json* field(const char* key) {
    if (!ok_) return nullptr;
    seen_.insert(key);
    auto it = node_.find(key);
    return it == node_.end() ? nullptr : &*it;
  }

  template <typename T>
  void get(const char* key, T& out, const char* type_name, bool (json::*is_type)() const) {
    const json* v = field(key);
    if (!v) return;
    if (!((*v).*is_type)()) {
      errors_.push_back(path_ + "." + key + ": expected " + type_name);
      return;
    }
    out = v->get<T>();
  }

  void get_string(const char* key, std::string& out) {
    get(key, out, "string", &json::is_string);
  }
  void get_double(const char* key, double& out) {
    const json* v = field(key);
    if (!v) return;
    if (!v->is_number()) {
      errors_.push_back(path_ + "." + key + ": expected number");
      return;
    }
    out = v->get<double>();
  }
  void get_int(const char* key, int& out) {
    const json* v = field(key);
    if (!v) return;
    if (!v->is_number_integer()) {
      errors_.push_back(path_ + "." + key + ": expected integer");
      return;
    }
    out = v->get<int>();
  }
  void get_long(const char* key, long& out) {
    const json* v = field(key);
    if (!v) return;
    if (!v->is_number_integer()) {
      errors_.push_back(path_ + "." + key + ": expected integer");
      return;
    }
    out = v->get<long>();
  }
  void get_bool(const char* key, bool& out) {
    get(key, out, "boolean", &json::is_boolean);
  }

  void finish() {
    if (!ok_) return;
    for (auto it = node_.begin(); it != node_.end(); ++it) {
      if (!seen_.count(it.key())) {
        errors_.push_back(path_ + ": unknown key '" + it.key() + "'");
      }
    }
  }

  const std::string& path() const { return path_; }
  std::vector<std::string>& errors() { return errors_; }

 private:
  const json& node_;
  std::string path_;
  std::vector<std::string>& errors_;
  std::set<std::string> seen_;
  bool ok_ = true;
};

void parse_epsilon(const json& node, const std::string& path, learners::EpsilonSchedule& out,
                   std::vector<std::string>& errors) {
  Checker c(node, path, errors);
  c.get_double("start", out.start);
  c.get_double("end", out.end);
  c.get_long("decay_steps", out.decay_steps);
  c.finish();
}

void parse_learner(const json& node, const std::string& path, learners::LearnerSpec& out,
                   std::vector<std::string>& errors) {
  Checker c(node, path, errors);
  c.get_string("algo", out.algo);
  c.get_double("gamma", out.config.gamma);
  if (const json* alpha = c.field("alpha")) {
    if (!alpha->is_number()) {
      errors.push_back(path + ".alpha: expected number");
    } else {
      out.config.alpha = alpha->get<double>();
    }
  }
  c.get_double("q_init", out.config.q_init);
  c.get_int("batch_size", out.config.batch_size);
  if (const json* cap = c.field("buffer_capacity")) {
    if (!cap->is_number_unsigned() && !cap->is_number_integer()) {
      errors.push_back(path + ".buffer_capacity: expected integer");
    } else {
      out.config.buffer_capacity = cap->get<std::size_t>();
    }
  }
  if (const json* eps = c.field("epsilon")) {
    parse_epsilon(*eps, path + ".epsilon", out.config.epsilon, errors);
  }
  c.finish();
  static const std::set<std::string> kAlgos = {"td", "mc", "linearq", "slateq"};
  if (!kAlgos.count(out.algo)) {
    errors.push_back(path + ".algo: unknown algorithm '" + out.algo + "'");
  }
}

void parse_prompt(const json& node, const std::string& path, llm::PromptSpec& out,
                  std::vector<std::string>& errors) {
  Checker c(node, path, errors);
  if (const json* strategies = c.field("strategies")) {
    if (!strategies->is_array()) {
      errors.push_back(path + ".strategies: expected array");
    } else {
      for (const auto& s : *strategies) {
        const std::string name = s.is_string() ? s.get<std::string>() : "";
        if (name == "cot") out.cot = true;
        else if (name == "zero_shot") out.zero_shot = true;
        else if (name == "few_shot") out.few_shot = true;
        else if (name == "name") out.name = true;
        else errors.push_back(path + ".strategies: unknown strategy '" + name + "'");
      }
    }
  }
  c.get_string("persona", out.persona);
  c.get_string("prior_knowledge", out.prior_knowledge);
  c.get_string("env_card", out.env_card);
  c.get_string("response_contract", out.response_contract);
  if (const json* examples = c.field("examples")) {
    if (!examples->is_array()) {
      errors.push_back(path + ".examples: expected array");
    } else {
      for (std::size_t i = 0; i < examples->size(); ++i) {
        llm::PromptExample ex;
        Checker ec((*examples)[i], path + ".examples[" + std::to_string(i) + "]", errors);
        ec.get_string("user", ex.user);
        ec.get_string("assistant", ex.assistant);
        ec.finish();
        out.examples.push_back(std::move(ex));
      }
    }
  }
  c.finish();
}

void parse_endpoint(const json& node, const std::string& path, llm::EndpointConfig& out,
                    std::vector<std::string>& errors) {
  Checker c(node, path, errors);
  c.get_string("base_url", out.base_url);
  c.get_string("model", out.model);
  c.get_double("temperature", out.temperature);
  c.get_double("top_p", out.top_p);
  c.get_double("repetition_penalty", out.repetition_penalty);
  c.get_int("top_k", out.top_k);
  c.get_int("max_tokens", out.max_tokens);
  c.get_int("timeout_ms", out.timeout_ms);
  c.get_int("max_retries", out.max_retries);
  c.get_string("auth_env_var", out.auth_env_var);
  c.finish();
}

void parse_evaluator(const json& node, const std::string& path, guidance::EvaluatorSpec& out,
                     std::vector<std::string>& errors) {
  Checker c(node, path, errors);
  std::string kind = "null";
  c.get_string("kind", kind);
  try {
    out.kind = guidance::evaluator_kind_from(kind);
  } catch (const std::invalid_argument& e) {
    errors.push_back(path + ".kind: " + e.what());
  }
  c.get_double("scale", out.scale);
  c.get_long("scale_decay_steps", out.scale_decay_steps);
  c.get_bool("cache_enabled", out.cache_enabled);
  c.get_string("cache_path", out.cache_path);
  if (const json* prompt = c.field("prompt")) {
    parse_prompt(*prompt, path + ".prompt", out.prompt, errors);
  }
  if (const json* endpoint = c.field("endpoint")) {
    parse_endpoint(*endpoint, path + ".endpoint", out.endpoint, errors);
  }
  c.finish();
}

void parse_run(const json& node, const std::string& path, harness::RunConfig& out,
               std::vector<std::string>& errors) {
  Checker c(node, path, errors);
  c.get_string("name", out.name);
  if (const json* env = c.field("env")) {
    Checker ec(*env, path + ".env", errors);
    ec.get_string("name", out.env.name);
    if (const json* params = ec.field("params")) out.env.params = *params;
    ec.finish();
    if (ec.ok() && !out.env.name.empty()) {
      try {
        envs::make_env(out.env);  // surfaces unknown env params with their keys
      } catch (const std::invalid_argument& e) {
        errors.push_back(path + ".env: " + e.what());
      }
    }
  } else {
    errors.push_back(path + ": missing env");
  }
  if (const json* learner = c.field("learner")) {
    parse_learner(*learner, path + ".learner", out.learner, errors);
  }
  if (const json* evaluator = c.field("evaluator")) {
    parse_evaluator(*evaluator, path + ".evaluator", out.evaluator, errors);
  }
  c.get_long("episodes", out.episodes);
  c.get_long("max_steps", out.max_steps);
  if (const json* checkpoints = c.field("checkpoints")) {
    if (!checkpoints->is_array()) {
      errors.push_back(path + ".checkpoints: expected array of integers");
    } else {
      out.checkpoints.clear();
      for (const auto& v : *checkpoints) {
        if (!v.is_number_integer()) {
          errors.push_back(path + ".checkpoints: expected array of integers");
          break;
        }
        out.checkpoints.push_back(v.get<long>());
      }
    }
  }
  c.get_int("eval_episodes", out.eval_episodes);
  if (const json* threshold = c.field("threshold")) {
    Checker tc(*threshold, path + ".threshold", errors);
    out.threshold.enabled = true;
    tc.get_double("value", out.threshold.value);
    tc.get_int("window", out.threshold.window);
    tc.finish();
  }
  c.get_bool("stop_after_goals", out.stop_after_goals);
  c.get_bool("record_transitions", out.record_transitions);
  c.finish();

  try {
    out.validate();
  } catch (const std::invalid_argument& e) {
    errors.push_back(path + ": " + e.what());
  }
}

}  // namespace

ExperimentManifest parse_manifest(const json& doc, std::vector<std::string>& errors) {
  ExperimentManifest manifest;
  Checker c(doc, "manifest", errors);
  c.get_string("output_dir", manifest.output_dir);
  if (const json* seeds = c.field("seeds")) {
    if (!seeds->is_array() || seeds->empty()) {
      errors.push_back("manifest.seeds: expected non-empty array of integers");
    } else {
      manifest.seeds.clear();
      for (const auto& s : *seeds) {
        if (!s.is_number_integer() && !s.is_number_unsigned()) {
          errors.push_back("manifest.seeds: expected non-empty array of integers");
          break;
        }
        manifest.seeds.push_back(s.get<std::uint64_t>());
      }
    }
  }
  if (const json* runs = c.field("runs")) {
    if (!runs->is_array() || runs->empty()) {
      errors.push_back("manifest.runs: expected non-empty array");
    } else {
      for (std::size_t i = 0; i < runs->size(); ++i) {
        harness::RunConfig run;
        run.seeds = manifest.seeds;
        parse_run((*runs)[i], "manifest.runs[" + std::to_string(i) + "]", run, errors);
        run.seeds = manifest.seeds;
        manifest.runs.push_back(std::move(run));
      }
    }
  } else {
    errors.push_back("manifest: missing runs");
  }
  if (const json* pairings = c.field("pairings")) {
    if (!pairings->is_array()) {
      errors.push_back("manifest.pairings: expected array");
    } else {
      for (std::size_t i = 0; i < pairings->size(); ++i) {
        ExperimentManifest::Pairing p;
        Checker pc((*pairings)[i], "manifest.pairings[" + std::to_string(i) + "]", errors);
        pc.get_string("guided", p.guided);
        pc.get_string("baseline", p.baseline);
        pc.finish();
        manifest.pairings.push_back(std::move(p));
      }
    }
  }
  c.finish();

  std::set<std::string> names;
  for (const auto& run : manifest.runs) {
    if (!names.insert(run.name).second) {
      errors.push_back("manifest: duplicate run name '" + run.name + "'");
    }
  }
  for (const auto& p : manifest.pairings) {
    if (!names.count(p.guided)) {
      errors.push_back("manifest: pairing references unknown run '" + p.guided + "'");
    }
    if (!names.count(p.baseline)) {
      errors.push_back("manifest: pairing references unknown run '" + p.baseline + "'");
    }
  }
  return manifest;
}

ExperimentManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open manifest '" + path + "'");
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument("manifest '" + path + "' is not valid JSON");

  std::vector<std::string> errors;
  ExperimentManifest manifest = parse_manifest(doc, errors);
  if (!errors.empty()) {
    std::string message = "manifest '" + path + "' is invalid:";
    for (const auto& e : errors) message += "\n  - " + e;
    throw std::invalid_argument(message);
  }
  return manifest;
}

llm::EndpointConfig load_endpoint_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open endpoint config '" + path + "'");
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) {
    throw std::invalid_argument("endpoint config '" + path + "' is not valid JSON");
  }
  std::vector<std::string> errors;
  llm::EndpointConfig config;
  parse_endpoint(doc, "endpoint", config, errors);
  if (!errors.empty()) {
    std::string message = "endpoint config '" + path + "' is invalid:";
    for (const auto& e : errors) message += "\n  - " + e;
    throw std::invalid_argument(message);
  }
  return config;
}

}  // namespace rglab::cli
