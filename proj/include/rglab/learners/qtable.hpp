#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

namespace rglab::learners {

using StateKey = std::uint64_t;

// Tabular action-value estimates with per-cell visit counts. Cells that
// were never written read as the configured initial value with count zero.
class QTable {
 public:
  QTable(int action_count, double initial_value);

  int action_count() const { return action_count_; }
  double initial_value() const { return initial_value_; }

  double value(StateKey state, int action) const;
  long visits(StateKey state, int action) const;

  void set_value(StateKey state, int action, double value);

  // value += alpha * (target - value); bumps the visit count.
  void nudge_towards(StateKey state, int action, double target, double alpha);

  // Running-average regression: count += 1, value += (target - value) / count.
  void average_in(StateKey state, int action, double target);

  double max_value(StateKey state) const;
  // Argmax with ties broken by the lowest action index.
  int greedy_action(StateKey state) const;

  std::size_t state_count() const { return rows_.size(); }

  // Versioned text serialization; doubles are stored as bit patterns so a
  // round trip is exact. The config hash written at save time must match at
  // load time.
  void save(std::ostream& out, std::uint64_t config_hash) const;
  static QTable load(std::istream& in, std::uint64_t expected_config_hash);

  bool operator==(const QTable& other) const;

 private:
  struct Row {
    std::vector<double> q;
    std::vector<long> n;
  };
  Row& row(StateKey state);
  const Row* find_row(StateKey state) const;

  int action_count_;
  double initial_value_;
  std::map<StateKey, Row> rows_;  // ordered so serialization is canonical
};

}  // namespace rglab::learners
