#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rglab/llm/prompt.hpp"
#include "rglab/llm/transport.hpp"

namespace rglab::llm {

// Endpoint and sampling configuration. The sampling defaults are the
// inference settings the framework was tuned with; override only when the
// serving stack needs something else.
struct EndpointConfig {
  std::string base_url = "http://127.0.0.1:8000";
  std::string model = "local";
  double temperature = 0.7;
  double top_p = 0.1;
  double repetition_penalty = 1.18;
  int top_k = 40;
  int max_tokens = 512;
  int timeout_ms = 30000;
  int max_retries = 2;
  std::string auth_env_var = "RGLAB_API_TOKEN";
};

struct ClientStats {
  long requests = 0;
  long retries = 0;
  double total_latency_ms = 0.0;
  double last_latency_ms = 0.0;
};

// Chat-completion client: serializes messages with the configured sampling
// parameters, sends them through the transport, retries transport errors
// with exponential backoff and returns the assistant text. The transport is
// injectable so tests and replays never need a live endpoint.
class LlmClient {
 public:
  using Sleeper = std::function<void(int milliseconds)>;

  LlmClient(EndpointConfig config, Transport& transport, Sleeper sleeper = nullptr);

  // Throws TransportError once retries are exhausted.
  std::string request_verdict(const std::vector<Message>& messages);

  // The exact request body request_verdict would send; recording hashes and
  // replay lookups both run over this serialization.
  std::string serialize_request(const std::vector<Message>& messages) const;

  const ClientStats& stats() const { return stats_; }
  const EndpointConfig& config() const { return config_; }

 private:
  EndpointConfig config_;
  Transport& transport_;
  Sleeper sleeper_;
  ClientStats stats_;
};

}  // namespace rglab::llm
