#include "rglab/learners/linear_q.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace rglab::learners {

LinearQFunction::LinearQFunction(TileCoder coder, int action_count, double initial_value)
    : coder_(std::move(coder)), action_count_(action_count) {
  if (action_count < 1) throw std::invalid_argument("LinearQFunction: action_count < 1");
  // Spread the initial value across the tilings so Q reads as initial_value.
  const double per_weight = initial_value / static_cast<double>(coder_.tilings());
  weights_.assign(static_cast<std::size_t>(action_count),
                  std::vector<double>(static_cast<std::size_t>(coder_.feature_count()), per_weight));
}

double LinearQFunction::fallback_alpha() const { return 0.5 / static_cast<double>(coder_.tilings()); }

double LinearQFunction::value(const std::vector<double>& box, int action) const {
  if (action < 0 || action >= action_count_) {
    throw std::invalid_argument("LinearQFunction::value: action out of range");
  }
  double sum = 0.0;
  for (int f : coder_.active_features(box)) {
    sum += weights_[static_cast<std::size_t>(action)][static_cast<std::size_t>(f)];
  }
  return sum;
}

double LinearQFunction::max_value(const std::vector<double>& box) const {
  double best = value(box, 0);
  for (int a = 1; a < action_count_; ++a) {
    const double v = value(box, a);
    if (v > best) best = v;
  }
  return best;
}

int LinearQFunction::greedy_action(const std::vector<double>& box) const {
  int best = 0;
  double best_value = value(box, 0);
  for (int a = 1; a < action_count_; ++a) {
    const double v = value(box, a);
    if (v > best_value) {
      best = a;
      best_value = v;
    }
  }
  return best;
}

void LinearQFunction::td_update(const Transition& t, const LearnerConfig& cfg) {
  const double alpha = cfg.alpha_or(fallback_alpha());
  const double bootstrap = t.done ? 0.0 : cfg.gamma * max_value(t.next_state.box);
  const double delta = t.reward + bootstrap - value(t.state.box, t.action);
  for (int f : coder_.active_features(t.state.box)) {
    weights_[static_cast<std::size_t>(t.action)][static_cast<std::size_t>(f)] += alpha * delta;
  }
}

void LinearQFunction::td_batch_update(const std::vector<Transition>& batch,
                                      const LearnerConfig& cfg) {
  if (batch.empty()) throw std::invalid_argument("LinearQFunction::td_batch_update: empty batch");
  for (const Transition& t : batch) td_update(t, cfg);
}

std::vector<double>& LinearQFunction::weights(int action) {
  return weights_.at(static_cast<std::size_t>(action));
}

const std::vector<double>& LinearQFunction::weights(int action) const {
  return weights_.at(static_cast<std::size_t>(action));
}

void LinearQFunction::save(std::ostream& out, std::uint64_t config_hash) const {
  out << "rglab-linearq v1 " << std::hex << config_hash << std::dec << " " << action_count_ << " "
      << coder_.feature_count() << "\n";
  for (const auto& row : weights_) {
    for (std::size_t f = 0; f < row.size(); ++f) {
      out << std::hex << std::bit_cast<std::uint64_t>(row[f]) << std::dec
          << (f + 1 == row.size() ? "\n" : " ");
    }
  }
}

LinearQFunction LinearQFunction::load(std::istream& in, std::uint64_t expected_config_hash,
                                      TileCoder coder) {
  std::string magic, version;
  std::uint64_t hash = 0;
  int actions = 0, features = 0;
  in >> magic >> version >> std::hex >> hash >> std::dec >> actions >> features;
  if (magic != "rglab-linearq" || version != "v1") {
    throw std::runtime_error("LinearQFunction::load: not a v1 linearq checkpoint");
  }
  if (hash != expected_config_hash) {
    throw std::runtime_error("LinearQFunction::load: config hash mismatch");
  }
  if (features != coder.feature_count()) {
    throw std::runtime_error("LinearQFunction::load: feature count mismatch");
  }
  LinearQFunction fn(std::move(coder), actions);
  for (auto& row : fn.weights_) {
    for (auto& w : row) {
      std::uint64_t bits = 0;
      in >> std::hex >> bits >> std::dec;
      w = std::bit_cast<double>(bits);
    }
  }
  if (!in) throw std::runtime_error("LinearQFunction::load: truncated checkpoint");
  return fn;
}

bool LinearQFunction::weights_equal(const LinearQFunction& other) const {
  if (action_count_ != other.action_count_) return false;
  for (int a = 0; a < action_count_; ++a) {
    const auto& mine = weights_[static_cast<std::size_t>(a)];
    const auto& theirs = other.weights_[static_cast<std::size_t>(a)];
    if (mine.size() != theirs.size()) return false;
    for (std::size_t f = 0; f < mine.size(); ++f) {
      if (std::bit_cast<std::uint64_t>(mine[f]) != std::bit_cast<std::uint64_t>(theirs[f])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace rglab::learners
