#pragma once

#include <vector>

#include "rglab/core/env.hpp"

namespace rglab::envs {

struct Document {
  int doc_id = 0;
  double kaleness = 0.0;  // 0 = pure chocolate, 1 = pure kale
};

// Latent user state. Satisfaction is always the logistic of tau * nke; it
// is recomputed after every update, never integrated.
struct UserState {
  double nke = 0.0;   // net kale exposure
  double sat = 0.5;   // sigmoid(tau * nke)
  double budget = 0.0;
};

struct ChocKaleConfig {
  int num_docs = 10;
  int slate_size = 2;
  double tau = 1.0;    // satisfaction sensitivity
  double beta = 0.9;   // memory discount
  double eta = 0.05;   // nke noise stddev
  double mu_kale = 0.5;
  double sigma_kale = 0.3;
  double mu_choc = 1.0;
  double sigma_choc = 0.3;
  double initial_budget = 200.0;
  double session_cost = 4.0;       // time units per consumed item
  double satisfaction_bonus = 0.9; // fraction of session_cost refundable
  double observation_noise = 0.1;  // stddev added to sat in the observation
};

// User response model: choice over a slate, engagement draw, and the
// exposure/satisfaction/budget update for one consumed item.
class UserModel {
 public:
  explicit UserModel(const ChocKaleConfig& config);

  UserState initial_state() const;

  // Index into the slate, sampled with probability proportional to
  // e^{1 - kaleness}. Empty slates are an argument error.
  int choose(const std::vector<Document>& slate, RngStream& stream) const;

  // Consumes the chosen document: draws lognormal engagement, advances net
  // kale exposure, recomputes satisfaction and charges the session budget.
  // Returns the engagement, which is the step's intrinsic reward.
  double update(UserState& user, const Document& chosen, RngStream& stream) const;

  double satisfaction(double nke) const;
  double expected_engagement(double kaleness) const;  // exp(mu + sigma^2 / 2)

 private:
  ChocKaleConfig config_;
};

// Slate recommendation episode over a fixed corpus of documents whose
// kaleness values are spread evenly over [0, 1] in doc-id order. An action
// picks one size-m subset of the corpus; the user chooses, consumes, and
// the episode ends when the session budget is spent. Only a noisy view of
// satisfaction is observable.
class ChocKaleEnv : public Environment {
 public:
  explicit ChocKaleEnv(ChocKaleConfig config = {});

  const std::string& env_id() const override { return id_; }
  int action_count() const override { return slate_spec_.action_count(); }
  int observation_arity() const override { return 1; }

  Observation reset(RngStream& stream) override;
  StepResult step(int action, RngStream& stream) override;

  std::uint64_t state_key(const Observation& obs) const override;
  std::string action_name(const Observation& obs, int action) const override;
  std::string task_card() const override;

  const SlateSpec* slate_spec() const override { return &slate_spec_; }
  const std::vector<Document>& documents() const { return docs_; }
  const ChocKaleConfig& config() const { return config_; }
  const UserModel& user_model() const { return user_model_; }
  const UserState& user_state() const { return user_; }

 private:
  Observation observe(RngStream& stream);

  ChocKaleConfig config_;
  UserModel user_model_;
  std::string id_ = "chockale";
  std::vector<Document> docs_;
  SlateSpec slate_spec_;
  UserState user_;
  double observed_sat_ = 0.5;
  bool done_ = true;
};

}  // namespace rglab::envs
