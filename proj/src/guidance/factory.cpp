#include "rglab/guidance/factory.hpp"

#include "rglab/guidance/llm_evaluator.hpp"

namespace rglab::guidance {

std::unique_ptr<Evaluator> make_evaluator(const EvaluatorSpec& spec, const Environment& env,
                                          llm::Transport* transport) {
  std::unique_ptr<Evaluator> core;
  switch (spec.kind) {
    case EvaluatorKind::kNull:
      core = std::make_unique<NullEvaluator>(spec.scale);
      break;
    case EvaluatorKind::kScripted:
      core = make_scripted_evaluator(env, spec.scale);
      break;
    case EvaluatorKind::kLlm: {
      std::unique_ptr<llm::Transport> owned;
      if (!transport) {
        owned = std::make_unique<llm::HttpTransport>(
            spec.endpoint.base_url, spec.endpoint.auth_env_var, spec.endpoint.timeout_ms);
        transport = owned.get();
      }
      auto evaluator = std::make_unique<LlmEvaluator>(spec.prompt, spec.endpoint, *transport,
                                                      env, spec.scale);
      if (owned) evaluator->adopt_transport(std::move(owned));
      core = std::move(evaluator);
      break;
    }
  }

  if (!spec.cache_enabled) return core;
  auto cache = spec.cache_path.empty() ? std::make_shared<VerdictCache>()
                                       : std::make_shared<VerdictCache>(spec.cache_path);
  return std::make_unique<CachedEvaluator>(std::move(core), std::move(cache), env.env_id(),
                                           spec.scale);
}

}  // namespace rglab::guidance
