#pragma once

#include <memory>

#include "rglab/guidance/evaluator.hpp"
#include "rglab/llm/client.hpp"

namespace rglab::guidance {

// Scores (state, action) pairs by asking a chat-completion endpoint. Every
// failure mode - transport exhaustion, unparseable text, out-of-support
// scores - becomes a zero verdict with parse-failure provenance and bumps
// the failure counter; the training loop never sees an exception.
class LlmEvaluator : public Evaluator {
 public:
  // The environment supplies the default task card and action names; it
  // must outlive the evaluator. The transport must outlive it as well.
  LlmEvaluator(llm::PromptSpec prompt, llm::EndpointConfig endpoint, llm::Transport& transport,
               const Environment& env, double scale, llm::LlmClient::Sleeper sleeper = nullptr);

  EvaluatorKind kind() const override { return EvaluatorKind::kLlm; }
  ShiftVerdict evaluate(const Observation& obs, int action) override;

  const llm::LlmClient& client() const { return client_; }
  const llm::PromptSpec& prompt_spec() const { return prompt_; }

  // Hands the evaluator ownership of the transport it was built around.
  void adopt_transport(std::unique_ptr<llm::Transport> transport) {
    owned_transport_ = std::move(transport);
  }

 private:
  llm::PromptSpec prompt_;
  const Environment& env_;
  double scale_;
  std::unique_ptr<llm::Transport> owned_transport_;
  llm::LlmClient client_;
};

}  // namespace rglab::guidance
