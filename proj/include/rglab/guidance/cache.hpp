#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "rglab/guidance/evaluator.hpp"

namespace rglab::guidance {

// Persistent (state, action) -> verdict store keyed by a hash of
// (env_id, canonical human rendering, action). The on-disk layout is
// append-only line-delimited JSON; the loader skips anything malformed and
// counts it, so a corrupt file degrades to a smaller cache, never a crash.
class VerdictCache {
 public:
  struct Entry {
    int shift = 0;
    std::string detail;
  };

  VerdictCache() = default;

  // Loads whatever is salvageable from the file; missing files mean an
  // empty cache. Entries stored later are appended to the same path.
  explicit VerdictCache(std::string path);

  static std::uint64_t key_of(const std::string& env_id, const std::string& human, int action);

  std::optional<Entry> lookup(std::uint64_t key) const;
  void store(std::uint64_t key, const Entry& entry);

  std::size_t size() const;
  long corrupt_lines() const { return corrupt_lines_; }

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::uint64_t, Entry> entries_;
  std::string path_;
  long corrupt_lines_ = 0;
};

// Serves verdicts from the cache and delegates misses to the wrapped
// evaluator, storing what comes back. Hits carry cache-hit provenance with
// the stored detail.
class CachedEvaluator : public Evaluator {
 public:
  CachedEvaluator(std::unique_ptr<Evaluator> upstream, std::shared_ptr<VerdictCache> cache,
                  std::string env_id, double scale);

  EvaluatorKind kind() const override { return upstream_->kind(); }
  ShiftVerdict evaluate(const Observation& obs, int action) override;

  const Evaluator& upstream() const { return *upstream_; }
  const VerdictCache& cache() const { return *cache_; }

 private:
  std::unique_ptr<Evaluator> upstream_;
  std::shared_ptr<VerdictCache> cache_;
  std::string env_id_;
  double scale_;
};

}  // namespace rglab::guidance
