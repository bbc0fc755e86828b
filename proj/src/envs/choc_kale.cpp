#include "rglab/envs/choc_kale.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rglab/core/format.hpp"

namespace rglab::envs {

UserModel::UserModel(const ChocKaleConfig& config) : config_(config) {}

double UserModel::satisfaction(double nke) const {
  return 1.0 / (1.0 + std::exp(-config_.tau * nke));
}

UserState UserModel::initial_state() const {
  UserState user;
  user.nke = 0.0;
  user.sat = satisfaction(user.nke);
  user.budget = config_.initial_budget;
  return user;
}

int UserModel::choose(const std::vector<Document>& slate, RngStream& stream) const {
  if (slate.empty()) throw std::invalid_argument("UserModel::choose: empty slate");
  std::vector<double> weights;
  weights.reserve(slate.size());
  for (const Document& doc : slate) weights.push_back(std::exp(1.0 - doc.kaleness));
  return stream.next_weighted(weights);
}

double UserModel::expected_engagement(double kaleness) const {
  const double mu = kaleness * config_.mu_kale + (1.0 - kaleness) * config_.mu_choc;
  const double sigma = kaleness * config_.sigma_kale + (1.0 - kaleness) * config_.sigma_choc;
  return std::exp(mu + 0.5 * sigma * sigma);
}

double UserModel::update(UserState& user, const Document& chosen, RngStream& stream) const {
  const double k = chosen.kaleness;
  if (k < 0.0 || k > 1.0) throw std::invalid_argument("UserModel::update: kaleness out of [0,1]");

  // Engagement: lognormal with parameters interpolated between the pure
  // kale and pure chocolate responses.
  const double mu = k * config_.mu_kale + (1.0 - k) * config_.mu_choc;
  const double sigma = k * config_.sigma_kale + (1.0 - k) * config_.sigma_choc;
  const double engagement = std::exp(stream.next_gaussian(mu, sigma));

  user.nke = config_.beta * user.nke + 2.0 * (k - 0.5) + stream.next_gaussian(0.0, config_.eta);
  user.sat = satisfaction(user.nke);

  // Session time: each item costs a fixed amount, refunded in part when a
  // satisfied user consumes engaging content. The fraction s/(0.5+s) keeps
  // the refund below the cost, so the budget always shrinks.
  const double engagement_fraction = engagement / (0.5 + engagement);
  const double consumed =
      config_.session_cost *
      (1.0 - config_.satisfaction_bonus * user.sat * engagement_fraction);
  user.budget -= consumed;
  return engagement;
}

ChocKaleEnv::ChocKaleEnv(ChocKaleConfig config)
    : config_(config),
      user_model_(config_),
      slate_spec_(SlateSpec::build(
          [&config] {
            if (config.num_docs < 2) throw std::invalid_argument("ChocKaleEnv: num_docs < 2");
            std::vector<double> k(static_cast<std::size_t>(config.num_docs));
            for (int i = 0; i < config.num_docs; ++i) {
              k[static_cast<std::size_t>(i)] =
                  static_cast<double>(i) / static_cast<double>(config.num_docs - 1);
            }
            return k;
          }(),
          config.slate_size)) {
  docs_.reserve(slate_spec_.item_kaleness.size());
  for (int i = 0; i < config_.num_docs; ++i) {
    docs_.push_back(Document{i, slate_spec_.item_kaleness[static_cast<std::size_t>(i)]});
  }
}

Observation ChocKaleEnv::observe(RngStream& stream) {
  observed_sat_ = user_.sat + stream.next_gaussian(0.0, config_.observation_noise);
  observed_sat_ = std::clamp(observed_sat_, 0.0, 1.0);
  Observation obs;
  obs.box = {observed_sat_};
  obs.env_id = id_;
  obs.human = "User satisfaction reads " + format_fixed(observed_sat_, 2) +
              " on a 0-1 scale (noisy estimate).";
  return obs;
}

Observation ChocKaleEnv::reset(RngStream& stream) {
  user_ = user_model_.initial_state();
  done_ = false;
  return observe(stream);
}

StepResult ChocKaleEnv::step(int action, RngStream& stream) {
  if (action < 0 || action >= action_count()) {
    throw std::invalid_argument("ChocKaleEnv::step: action out of range");
  }
  if (done_) throw std::logic_error("ChocKaleEnv::step: episode already terminal");

  const std::vector<int>& picks = slate_spec_.slate_for(action);
  std::vector<Document> slate;
  slate.reserve(picks.size());
  for (int item : picks) slate.push_back(docs_[static_cast<std::size_t>(item)]);

  const int chosen = user_model_.choose(slate, stream);
  const double engagement = user_model_.update(user_, slate[static_cast<std::size_t>(chosen)], stream);
  done_ = user_.budget <= 0.0;
  return StepResult{observe(stream), engagement, done_};
}

std::uint64_t ChocKaleEnv::state_key(const Observation& obs) const {
  // Four satisfaction bins, split at the oracle's low-satisfaction gate.
  const int bin = static_cast<int>(obs.box[0] * 4.0);
  return static_cast<std::uint64_t>(std::clamp(bin, 0, 3));
}

std::string ChocKaleEnv::action_name(const Observation&, int action) const {
  const std::vector<int>& picks = slate_spec_.slate_for(action);
  std::string name = "recommend documents {";
  for (std::size_t i = 0; i < picks.size(); ++i) {
    if (i > 0) name += ", ";
    name += std::to_string(picks[i]) + " (kaleness " +
            format_fixed(docs_[static_cast<std::size_t>(picks[i])].kaleness, 2) + ")";
  }
  return name + "}";
}

std::string ChocKaleEnv::task_card() const {
  return "A recommender serves a slate of " + std::to_string(config_.slate_size) +
         " documents per step from " + std::to_string(config_.num_docs) +
         " candidates, each rated on a 0-1 kaleness scale: 0 is pure chocolate (engaging but "
         "unhealthy), 1 is pure kale (less engaging but good for long-term satisfaction). "
         "The user picks one item, engagement is the reward, and chocolate-heavy diets erode "
         "the satisfaction that keeps the session alive. The goal is the highest total "
         "engagement over the whole session.";
}

}  // namespace rglab::envs
