#include "rglab/llm/transport.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>

#include <httplib.h>
#include <json.hpp>

#include "rglab/core/rng.hpp"

namespace rglab::llm {

using nlohmann::json;

std::uint64_t request_hash(const std::string& request_json) { return fnv1a64(request_json); }

HttpTransport::HttpTransport(std::string base_url, std::string auth_env_var, int timeout_ms)
    : base_url_(std::move(base_url)), auth_env_var_(std::move(auth_env_var)),
      timeout_ms_(timeout_ms) {}

std::string HttpTransport::complete(const std::string& request_json) {
  httplib::Client client(base_url_);
  client.set_connection_timeout(timeout_ms_ / 1000, (timeout_ms_ % 1000) * 1000);
  client.set_read_timeout(timeout_ms_ / 1000, (timeout_ms_ % 1000) * 1000);

  httplib::Headers headers;
  if (!auth_env_var_.empty()) {
    if (const char* token = std::getenv(auth_env_var_.c_str())) {
      headers.emplace("Authorization", std::string("Bearer ") + token);
    }
  }
  auto res = client.Post("/v1/chat/completions", headers, request_json, "application/json");
  if (!res) {
    throw TransportError("http transport: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw TransportError("http transport: status " + std::to_string(res->status));
  }
  return res->body;
}

RecordingTransport::RecordingTransport(Transport& inner, std::string path)
    : inner_(inner), path_(std::move(path)) {}

std::string RecordingTransport::complete(const std::string& request_json) {
  const auto start = std::chrono::steady_clock::now();
  std::string response = inner_.complete(request_json);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  const double latency_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();

  json record = {{"request_hash", request_hash(request_json)},
                 {"response", response},
                 {"latency_ms", latency_ms}};
  std::ofstream out(path_, std::ios::app);
  out << record.dump() << "\n";
  return response;
}

ReplayTransport::ReplayTransport(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TransportError("replay transport: cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.contains("request_hash") ||
        !record.contains("response")) {
      continue;  // tolerate stray lines; replays only need well-formed records
    }
    responses_[record["request_hash"].get<std::uint64_t>()].push_back(
        record["response"].get<std::string>());
  }
}

std::string ReplayTransport::complete(const std::string& request_json) {
  auto it = responses_.find(request_hash(request_json));
  if (it == responses_.end() || it->second.empty()) {
    throw TransportError("replay transport: no recorded response for this request");
  }
  std::string response = it->second.front();
  // Keep the last response available for repeat queries of the same state.
  if (it->second.size() > 1) it->second.pop_front();
  return response;
}

}  // namespace rglab::llm
