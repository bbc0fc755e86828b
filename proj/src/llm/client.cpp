#include "rglab/llm/client.hpp"

#include <chrono>
#include <thread>

#include <json.hpp>

namespace rglab::llm {

using nlohmann::json;

LlmClient::LlmClient(EndpointConfig config, Transport& transport, Sleeper sleeper)
    : config_(std::move(config)), transport_(transport), sleeper_(std::move(sleeper)) {
  if (!sleeper_) {
    sleeper_ = [](int ms) { std::this_thread::sleep_for(std::chrono::milliseconds(ms)); };
  }
}

std::string LlmClient::serialize_request(const std::vector<Message>& messages) const {
  json body;
  body["model"] = config_.model;
  body["temperature"] = config_.temperature;
  body["top_p"] = config_.top_p;
  body["top_k"] = config_.top_k;
  body["repetition_penalty"] = config_.repetition_penalty;
  body["max_tokens"] = config_.max_tokens;
  json msgs = json::array();
  for (const Message& m : messages) {
    msgs.push_back({{"role", m.role}, {"content", m.content}});
  }
  body["messages"] = msgs;
  return body.dump();  // nlohmann orders object keys, so this is canonical
}

std::string LlmClient::request_verdict(const std::vector<Message>& messages) {
  const std::string request = serialize_request(messages);
  int backoff_ms = 250;
  for (int attempt = 0;; ++attempt) {
    try {
      const auto start = std::chrono::steady_clock::now();
      std::string body = transport_.complete(request);
      const auto elapsed = std::chrono::steady_clock::now() - start;
      stats_.last_latency_ms =
          std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
      stats_.total_latency_ms += stats_.last_latency_ms;
      ++stats_.requests;

      json parsed = json::parse(body, nullptr, false);
      if (parsed.is_discarded()) {
        // raw text response (canned/replay transports hand back the text itself)
        return body;
      }
      if (parsed.contains("choices") && !parsed["choices"].empty() &&
          parsed["choices"][0].contains("message")) {
        return parsed["choices"][0]["message"].value("content", "");
      }
      return body;
    } catch (const TransportError&) {
      if (attempt >= config_.max_retries) throw;
      ++stats_.retries;
      sleeper_(backoff_ms);
      backoff_ms *= 2;
    }
  }
}

}  // namespace rglab::llm
