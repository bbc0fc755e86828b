#include "rglab/llm/prompt.hpp"

#include <stdexcept>

namespace rglab::llm {

std::vector<Message> build_prompt(const PromptSpec& spec, const Observation& obs, int action,
                                  const std::string& action_name) {
  if (spec.few_shot && spec.examples.empty()) {
    throw std::invalid_argument("build_prompt: few_shot requires at least one example");
  }
  if (spec.name && spec.persona.empty()) {
    throw std::invalid_argument("build_prompt: name requires a persona");
  }
  if (spec.env_card.empty()) {
    throw std::invalid_argument("build_prompt: missing task card");
  }

  std::vector<Message> messages;

  std::string system = "You judge one action taken by a learning agent and score it.";
  if (spec.name) system = "You are " + spec.persona + ". " + system;
  messages.push_back({"system", system});

  if (spec.few_shot) {
    for (const PromptExample& ex : spec.examples) {
      messages.push_back({"user", ex.user});
      messages.push_back({"assistant", ex.assistant});
    }
  }

  // Block order is fixed; strategy flags only switch blocks on or off, so
  // the rendered prompt is canonical for a given flag set.
  std::string body = "Task:\n" + spec.env_card + "\n";
  if (!spec.prior_knowledge.empty()) {
    body += "\nBackground knowledge:\n" + spec.prior_knowledge + "\n";
  }
  if (spec.zero_shot) {
    body +=
        "\nJudge only whether the proposed action is a good choice in the current state: "
        "answer 1 if a knowledgeable player would approve of it, -1 if they would disapprove, "
        "and 0 if it makes no clear difference or the situation is not covered by what you "
        "know.\n";
  }
  if (spec.cot) {
    body += "\nReason step by step about the situation before committing to the final line.\n";
  }
  body += "\nCurrent state:\n" + obs.human + "\n";
  body += "Proposed action (" + std::to_string(action) + "): " + action_name + "\n";
  body += "\n" + spec.response_contract;
  messages.push_back({"user", body});

  return messages;
}

std::string render_messages(const std::vector<Message>& messages) {
  std::string out;
  for (const Message& m : messages) {
    out += "[" + m.role + "]\n" + m.content + "\n\n";
  }
  return out;
}

}  // namespace rglab::llm
