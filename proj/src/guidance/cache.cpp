#include "rglab/guidance/cache.hpp"

#include <fstream>

#include <json.hpp>

#include "rglab/core/rng.hpp"

namespace rglab::guidance {

using nlohmann::json;

VerdictCache::VerdictCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.contains("key") || !record.contains("shift") ||
        !record.contains("detail") || !record["shift"].is_number_integer()) {
      ++corrupt_lines_;
      continue;
    }
    const int shift = record["shift"].get<int>();
    if (shift < -1 || shift > 1) {
      ++corrupt_lines_;
      continue;
    }
    entries_[record["key"].get<std::uint64_t>()] =
        Entry{shift, record["detail"].get<std::string>()};
  }
}

std::uint64_t VerdictCache::key_of(const std::string& env_id, const std::string& human,
                                   int action) {
  std::string material = env_id;
  material += '\x1f';
  material += human;
  material += '\x1f';
  material += std::to_string(action);
  return fnv1a64(material);
}

std::optional<VerdictCache::Entry> VerdictCache::lookup(std::uint64_t key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void VerdictCache::store(std::uint64_t key, const Entry& entry) {
  std::lock_guard<std::mutex> lock(mutex_);
  entries_[key] = entry;
  if (!path_.empty()) {
    std::ofstream out(path_, std::ios::app);
    out << json{{"key", key}, {"shift", entry.shift}, {"detail", entry.detail}}.dump() << "\n";
  }
}

std::size_t VerdictCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

CachedEvaluator::CachedEvaluator(std::unique_ptr<Evaluator> upstream,
                                 std::shared_ptr<VerdictCache> cache, std::string env_id,
                                 double scale)
    : upstream_(std::move(upstream)), cache_(std::move(cache)), env_id_(std::move(env_id)),
      scale_(scale) {
  stats_.cache_corrupt_lines = cache_->corrupt_lines();
}

ShiftVerdict CachedEvaluator::evaluate(const Observation& obs, int action) {
  ++stats_.queries;
  const std::uint64_t key = VerdictCache::key_of(env_id_, obs.human, action);
  if (auto hit = cache_->lookup(key)) {
    ++stats_.cache_hits;
    return ShiftVerdict{hit->shift, scale_, Provenance::kCacheHit, hit->detail};
  }
  ShiftVerdict verdict = upstream_->evaluate(obs, action);
  stats_.failures = upstream_->stats().failures;
  cache_->store(key, VerdictCache::Entry{verdict.shift, verdict.detail});
  return verdict;
}

}  // namespace rglab::guidance
