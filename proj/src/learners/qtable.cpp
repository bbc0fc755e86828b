#include "rglab/learners/qtable.hpp"

#include <bit>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rglab::learners {

QTable::QTable(int action_count, double initial_value)
    : action_count_(action_count), initial_value_(initial_value) {
  if (action_count < 1) throw std::invalid_argument("QTable: action_count < 1");
}

QTable::Row& QTable::row(StateKey state) {
  auto [it, inserted] = rows_.try_emplace(state);
  if (inserted) {
    it->second.q.assign(static_cast<std::size_t>(action_count_), initial_value_);
    it->second.n.assign(static_cast<std::size_t>(action_count_), 0);
  }
  return it->second;
}

const QTable::Row* QTable::find_row(StateKey state) const {
  auto it = rows_.find(state);
  return it == rows_.end() ? nullptr : &it->second;
}

double QTable::value(StateKey state, int action) const {
  const Row* r = find_row(state);
  return r ? r->q[static_cast<std::size_t>(action)] : initial_value_;
}

long QTable::visits(StateKey state, int action) const {
  const Row* r = find_row(state);
  return r ? r->n[static_cast<std::size_t>(action)] : 0;
}

void QTable::set_value(StateKey state, int action, double value) {
  row(state).q[static_cast<std::size_t>(action)] = value;
}

void QTable::nudge_towards(StateKey state, int action, double target, double alpha) {
  Row& r = row(state);
  const auto a = static_cast<std::size_t>(action);
  r.q[a] += alpha * (target - r.q[a]);
  r.n[a] += 1;
}

void QTable::average_in(StateKey state, int action, double target) {
  Row& r = row(state);
  const auto a = static_cast<std::size_t>(action);
  r.n[a] += 1;
  r.q[a] += (target - r.q[a]) / static_cast<double>(r.n[a]);
}

double QTable::max_value(StateKey state) const {
  const Row* r = find_row(state);
  if (!r) return initial_value_;
  double best = r->q[0];
  for (double v : r->q) best = v > best ? v : best;
  return best;
}

int QTable::greedy_action(StateKey state) const {
  const Row* r = find_row(state);
  if (!r) return 0;
  int best = 0;
  for (int a = 1; a < action_count_; ++a) {
    if (r->q[static_cast<std::size_t>(a)] > r->q[static_cast<std::size_t>(best)]) best = a;
  }
  return best;
}

void QTable::save(std::ostream& out, std::uint64_t config_hash) const {
  out << "rglab-qtable v1 " << std::hex << config_hash << std::dec << " " << action_count_ << " "
      << std::hex << std::bit_cast<std::uint64_t>(initial_value_) << std::dec << "\n";
  out << rows_.size() << "\n";
  for (const auto& [key, r] : rows_) {
    out << key;
    for (int a = 0; a < action_count_; ++a) {
      out << " " << std::hex << std::bit_cast<std::uint64_t>(r.q[static_cast<std::size_t>(a)])
          << std::dec << " " << r.n[static_cast<std::size_t>(a)];
    }
    out << "\n";
  }
}

QTable QTable::load(std::istream& in, std::uint64_t expected_config_hash) {
  std::string magic, version;
  std::uint64_t hash = 0, init_bits = 0;
  int actions = 0;
  in >> magic >> version >> std::hex >> hash >> std::dec >> actions >> std::hex >> init_bits >>
      std::dec;
  if (magic != "rglab-qtable" || version != "v1") {
    throw std::runtime_error("QTable::load: not a v1 qtable checkpoint");
  }
  if (hash != expected_config_hash) {
    std::ostringstream msg;
    msg << "QTable::load: config hash mismatch (file " << std::hex << hash << ", expected "
        << expected_config_hash << ")";
    throw std::runtime_error(msg.str());
  }
  QTable table(actions, std::bit_cast<double>(init_bits));
  std::size_t n_rows = 0;
  in >> n_rows;
  for (std::size_t i = 0; i < n_rows; ++i) {
    StateKey key;
    in >> key;
    Row r;
    r.q.resize(static_cast<std::size_t>(actions));
    r.n.resize(static_cast<std::size_t>(actions));
    for (int a = 0; a < actions; ++a) {
      std::uint64_t bits = 0;
      in >> std::hex >> bits >> std::dec >> r.n[static_cast<std::size_t>(a)];
      r.q[static_cast<std::size_t>(a)] = std::bit_cast<double>(bits);
    }
    table.rows_.emplace(key, std::move(r));
  }
  if (!in) throw std::runtime_error("QTable::load: truncated checkpoint");
  return table;
}

bool QTable::operator==(const QTable& other) const {
  if (action_count_ != other.action_count_ || rows_.size() != other.rows_.size()) return false;
  if (std::bit_cast<std::uint64_t>(initial_value_) !=
      std::bit_cast<std::uint64_t>(other.initial_value_)) {
    return false;
  }
  auto a = rows_.begin();
  auto b = other.rows_.begin();
  for (; a != rows_.end(); ++a, ++b) {
    if (a->first != b->first || a->second.n != b->second.n) return false;
    for (std::size_t i = 0; i < a->second.q.size(); ++i) {
      if (std::bit_cast<std::uint64_t>(a->second.q[i]) !=
          std::bit_cast<std::uint64_t>(b->second.q[i])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace rglab::learners
