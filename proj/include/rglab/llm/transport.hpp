#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

namespace rglab::llm {

struct TransportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One chat-completion round trip: takes the serialized request JSON and
// returns the raw response body. Implementations throw TransportError on
// delivery failure.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual std::string complete(const std::string& request_json) = 0;
};

// POSTs to {base_url}/v1/chat/completions. The bearer token, when
// configured, is read from the named environment variable at request time.
class HttpTransport : public Transport {
 public:
  HttpTransport(std::string base_url, std::string auth_env_var, int timeout_ms);
  std::string complete(const std::string& request_json) override;

 private:
  std::string base_url_;
  std::string auth_env_var_;
  int timeout_ms_;
};

// Test/offline transport answering from a fixed function of the request.
class CannedTransport : public Transport {
 public:
  using Responder = std::function<std::string(const std::string& request_json)>;
  explicit CannedTransport(Responder responder) : responder_(std::move(responder)) {}
  std::string complete(const std::string& request_json) override {
    return responder_(request_json);
  }

 private:
  Responder responder_;
};

// Wraps another transport and appends every exchange to a session file as
// line-delimited JSON records {request_hash, response, latency_ms}.
class RecordingTransport : public Transport {
 public:
  RecordingTransport(Transport& inner, std::string path);
  std::string complete(const std::string& request_json) override;

 private:
  Transport& inner_;
  std::string path_;
};

// Serves a recorded session offline. Responses are keyed by request hash
// and replayed in recorded order per key; a request whose hash was never
// recorded is a transport error.
class ReplayTransport : public Transport {
 public:
  explicit ReplayTransport(const std::string& path);
  std::string complete(const std::string& request_json) override;

 private:
  std::map<std::uint64_t, std::deque<std::string>> responses_;
};

// Canonical hash of a serialized request; recording and replay agree on it.
std::uint64_t request_hash(const std::string& request_json);

}  // namespace rglab::llm
