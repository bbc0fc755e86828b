#pragma once

#include <string>
#include <vector>

#include "rglab/core/types.hpp"

namespace rglab::llm {

struct Message {
  std::string role;  // system | user | assistant
  std::string content;
};

// One worked exchange for few-shot prompting.
struct PromptExample {
  std::string user;
  std::string assistant;
};

// Prompt recipe. Strategies compose: the builder emits their blocks in one
// fixed order, so any insertion order of the flags produces identical
// bytes. A prompt with prior_knowledge set is "prior-knowledge-inclusive";
// without it only the model's own weights carry the domain knowledge.
struct PromptSpec {
  bool cot = false;
  bool zero_shot = false;
  bool few_shot = false;
  bool name = false;

  std::string persona;                  // required by `name`
  std::vector<PromptExample> examples;  // required non-empty by `few_shot`
  std::string prior_knowledge;          // optional rules/tutorial block
  std::string env_card;                 // task description; empty -> environment default
  std::string response_contract =
      "End your reply with one final line of exactly this form: SCORE: <-1|0|1>";
};

// Deterministic message list for one (state, action) query. env_card must
// be non-empty by the time this is called (the evaluator fills it from the
// environment when the caller leaves it blank). Throws std::invalid_argument
// when `few_shot` is set without examples or `name` without a persona.
std::vector<Message> build_prompt(const PromptSpec& spec, const Observation& obs,
                                  int action, const std::string& action_name);

// Flat rendering used by golden-file tests and session logs.
std::string render_messages(const std::vector<Message>& messages);

}  // namespace rglab::llm
