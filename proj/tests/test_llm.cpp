#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rglab/envs/blackjack.hpp"
#include "rglab/llm/client.hpp"
#include "rglab/llm/parse.hpp"
#include "rglab/llm/prompt.hpp"
#include "rglab/llm/transport.hpp"
#include "support/prompt_fixture.hpp"

using namespace rglab;
using namespace rglab::llm;

TEST_CASE("parse_score reads the contract line") {
  const ShiftVerdict v = parse_score("The player should stand here.\nSCORE: -1");
  CHECK(v.shift == -1);
  CHECK(v.provenance == Provenance::kLlmText);
}

TEST_CASE("parse_score without a contract line fails soft") {
  const ShiftVerdict v = parse_score("The move is fine.");
  CHECK(v.shift == 0);
  CHECK(v.provenance == Provenance::kParseFailure);
}

TEST_CASE("parse_score rejects out-of-support scores") {
  const ShiftVerdict v = parse_score("SCORE: 2");
  CHECK(v.shift == 0);
  CHECK(v.provenance == Provenance::kParseFailure);
}

TEST_CASE("parse_score takes the last matching line") {
  CHECK(parse_score("SCORE: 1\nmore thoughts\nSCORE: 0").shift == 0);
  CHECK(parse_score("SCORE: -1\nSCORE: 17").shift == -1);  // 17 does not match
  CHECK(parse_score("  SCORE:  1  \r\n").shift == 1);
}

TEST_CASE("parse_score is total over arbitrary bytes") {
  RngStream stream(777, "fuzz");
  const char alphabet[] = "SCORE: -101\n\r\t abcxyz{}[]():;.,+*#@\"'\\\x01\x7f";
  for (int i = 0; i < 100000; ++i) {
    const int length = stream.next_int(60);
    std::string text;
    for (int c = 0; c < length; ++c) {
      text += alphabet[static_cast<std::size_t>(stream.next_int(sizeof(alphabet) - 1))];
    }
    const ShiftVerdict v = parse_score(text);
    CHECK(v.shift >= -1);
    CHECK(v.shift <= 1);
  }
}

TEST_CASE("prompt golden files for every strategy combination") {
  envs::BlackjackEnv env;
  const Observation obs = env.reset_to(14, 10, false);
  const bool regenerate = std::getenv("RGLAB_REGEN_GOLDEN") != nullptr;
  const std::filesystem::path dir = std::filesystem::path(RGLAB_GOLDEN_DIR) / "prompts";
  if (regenerate) std::filesystem::create_directories(dir);

  for (unsigned mask = 0; mask < 16; ++mask) {
    for (bool with_prior : {false, true}) {
      PromptSpec spec = prompt_fixture::spec_for(mask, with_prior);
      spec.env_card = env.task_card();
      const std::string rendered =
          render_messages(build_prompt(spec, obs, 1, env.action_name(obs, 1)));
      const auto path = dir / (prompt_fixture::combo_name(mask, with_prior) + ".txt");
      if (regenerate) {
        std::ofstream out(path, std::ios::binary);
        out << rendered;
      } else {
        std::ifstream in(path, std::ios::binary);
        REQUIRE_MESSAGE(in.good(), "missing golden file ", path.string());
        std::stringstream expected;
        expected << in.rdbuf();
        CHECK_MESSAGE(rendered == expected.str(), "golden mismatch for ", path.string());
      }
    }
  }
}

TEST_CASE("strategy order in the manifest never changes the prompt bytes") {
  envs::BlackjackEnv env;
  const Observation obs = env.reset_to(14, 10, false);
  PromptSpec a = prompt_fixture::spec_for(0b1111, true);
  a.env_card = env.task_card();
  // same flags assembled in a different order
  PromptSpec b;
  b.name = true;
  b.few_shot = true;
  b.zero_shot = true;
  b.cot = true;
  b.persona = a.persona;
  b.examples = a.examples;
  b.prior_knowledge = a.prior_knowledge;
  b.env_card = a.env_card;
  CHECK(render_messages(build_prompt(a, obs, 1, "hit")) ==
        render_messages(build_prompt(b, obs, 1, "hit")));
}

TEST_CASE("prompt determinism and empty strategy set") {
  envs::BlackjackEnv env;
  const Observation obs = env.reset_to(14, 10, false);
  PromptSpec minimal;
  minimal.env_card = env.task_card();
  const auto messages = build_prompt(minimal, obs, 1, env.action_name(obs, 1));
  REQUIRE(messages.size() == 2);  // system + task/state/contract
  CHECK(messages[0].role == "system");
  CHECK(messages[1].content.find("SCORE: <-1|0|1>") != std::string::npos);
  CHECK(messages[1].content.find(obs.human) != std::string::npos);
  CHECK(render_messages(build_prompt(minimal, obs, 1, "hit")) ==
        render_messages(build_prompt(minimal, obs, 1, "hit")));
}

TEST_CASE("prompt configuration errors") {
  envs::BlackjackEnv env;
  const Observation obs = env.reset_to(14, 10, false);
  PromptSpec spec;
  spec.env_card = "card";
  spec.few_shot = true;
  spec.examples.clear();
  CHECK_THROWS_AS(build_prompt(spec, obs, 1, "hit"), std::invalid_argument);
  spec.few_shot = false;
  spec.name = true;
  spec.persona.clear();
  CHECK_THROWS_AS(build_prompt(spec, obs, 1, "hit"), std::invalid_argument);
  PromptSpec no_card;
  CHECK_THROWS_AS(build_prompt(no_card, obs, 1, "hit"), std::invalid_argument);
}

TEST_CASE("endpoint defaults match the framework's inference settings") {
  const EndpointConfig config;
  CHECK(config.temperature == 0.7);
  CHECK(config.top_p == 0.1);
  CHECK(config.repetition_penalty == 1.18);
  CHECK(config.top_k == 40);
}

TEST_CASE("client serializes sampling parameters and parses chat responses") {
  EndpointConfig config;
  config.model = "test-model";
  std::string seen_request;
  CannedTransport transport([&](const std::string& request) {
    seen_request = request;
    return std::string(R"({"choices":[{"message":{"content":"fine\nSCORE: 1"}}]})");
  });
  LlmClient client(config, transport, [](int) {});
  const std::string text = client.request_verdict({{"user", "hello"}});
  CHECK(text == "fine\nSCORE: 1");
  CHECK(seen_request.find("\"temperature\":0.7") != std::string::npos);
  CHECK(seen_request.find("\"top_p\":0.1") != std::string::npos);
  CHECK(seen_request.find("\"top_k\":40") != std::string::npos);
  CHECK(seen_request.find("\"repetition_penalty\":1.18") != std::string::npos);
  CHECK(seen_request.find("test-model") != std::string::npos);
  CHECK(client.stats().requests == 1);
}

TEST_CASE("client retries with backoff then surfaces exhaustion") {
  EndpointConfig config;
  config.max_retries = 2;
  int attempts = 0;
  CannedTransport flaky([&](const std::string&) -> std::string {
    ++attempts;
    if (attempts < 3) throw TransportError("down");
    return "SCORE: 0";
  });
  std::vector<int> sleeps;
  LlmClient client(config, flaky, [&](int ms) { sleeps.push_back(ms); });
  CHECK(client.request_verdict({{"user", "x"}}) == "SCORE: 0");
  CHECK(attempts == 3);
  CHECK(sleeps == std::vector<int>{250, 500});

  attempts = 0;
  CannedTransport dead([&](const std::string&) -> std::string {
    ++attempts;
    throw TransportError("down");
  });
  LlmClient doomed(config, dead, [](int) {});
  CHECK_THROWS_AS(doomed.request_verdict({{"user", "x"}}), TransportError);
  CHECK(attempts == 3);  // first try + 2 retries
}

TEST_CASE("record and replay round trip") {
  const auto path =
      (std::filesystem::temp_directory_path() / "rglab_session_test.jsonl").string();
  std::filesystem::remove(path);

  EndpointConfig config;
  int counter = 0;
  CannedTransport upstream([&](const std::string&) {
    return "attempt " + std::to_string(counter++) + "\nSCORE: 1";
  });
  RecordingTransport recorder(upstream, path);
  LlmClient live(config, recorder, [](int) {});

  std::vector<std::string> originals;
  originals.push_back(live.request_verdict({{"user", "state A"}}));
  originals.push_back(live.request_verdict({{"user", "state B"}}));
  originals.push_back(live.request_verdict({{"user", "state A"}}));  // repeat, new text

  ReplayTransport replay(path);
  LlmClient offline(config, replay, [](int) {});
  CHECK(offline.request_verdict({{"user", "state A"}}) == originals[0]);
  CHECK(offline.request_verdict({{"user", "state B"}}) == originals[1]);
  CHECK(offline.request_verdict({{"user", "state A"}}) == originals[2]);
  // exhausted keys keep serving the last recorded response
  CHECK(offline.request_verdict({{"user", "state A"}}) == originals[2]);
  CHECK_THROWS_AS(offline.request_verdict({{"user", "never seen"}}), TransportError);
  std::filesystem::remove(path);
}
