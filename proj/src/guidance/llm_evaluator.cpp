#include "rglab/guidance/llm_evaluator.hpp"

#include "rglab/llm/parse.hpp"

namespace rglab::guidance {

LlmEvaluator::LlmEvaluator(llm::PromptSpec prompt, llm::EndpointConfig endpoint,
                           llm::Transport& transport, const Environment& env, double scale,
                           llm::LlmClient::Sleeper sleeper)
    : prompt_(std::move(prompt)), env_(env), scale_(scale),
      client_(std::move(endpoint), transport, std::move(sleeper)) {
  if (prompt_.env_card.empty()) prompt_.env_card = env_.task_card();
}

ShiftVerdict LlmEvaluator::evaluate(const Observation& obs, int action) {
  ++stats_.queries;
  std::string response;
  try {
    const auto messages = llm::build_prompt(prompt_, obs, action, env_.action_name(obs, action));
    response = client_.request_verdict(messages);
  } catch (const std::exception& e) {
    ++stats_.failures;
    return ShiftVerdict{0, scale_, Provenance::kParseFailure,
                        std::string("transport: ") + e.what()};
  }
  ShiftVerdict verdict = llm::parse_score(response);
  verdict.scale = scale_;
  if (verdict.provenance == Provenance::kParseFailure) ++stats_.failures;
  return verdict;
}

}  // namespace rglab::guidance
