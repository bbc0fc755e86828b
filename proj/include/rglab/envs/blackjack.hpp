#pragma once

#include "rglab/core/env.hpp"

namespace rglab::envs {

// Running hand total with the usable-ace convention: one ace counts as 11
// only while that keeps the total at or below 21.
struct HandTotal {
  int total = 0;
  bool usable_ace = false;
};

HandTotal add_card(HandTotal hand, int card);

// Round settlement from the player's and dealer's final totals, both <= 21:
// +1 win, 0 push, -1 loss.
int settle(int player_total, int dealer_total);

// Infinite-deck blackjack, actions {0 = stick, 1 = hit}. Cards are drawn
// with replacement: ranks 1..9 with probability 1/13 each and 10 with
// probability 4/13. The dealer stands on every 17. Naturals pay +1 like any
// other win; there is no doubling or splitting.
class BlackjackEnv : public Environment {
 public:
  BlackjackEnv() = default;

  const std::string& env_id() const override { return id_; }
  int action_count() const override { return 2; }
  int observation_arity() const override { return 3; }

  Observation reset(RngStream& stream) override;
  StepResult step(int action, RngStream& stream) override;

  std::uint64_t state_key(const Observation& obs) const override;
  std::string action_name(const Observation& obs, int action) const override;
  std::string task_card() const override;

  // Starts an episode from an exact (player_sum, dealer_up, usable_ace)
  // cell instead of dealing. Used by policy-evaluation cross-checks.
  Observation reset_to(int player_sum, int dealer_up, bool usable_ace);

  static int draw_card(RngStream& stream);  // 1..10, ten weighted 4/13

 private:
  Observation observe() const;

  std::string id_ = "blackjack";
  HandTotal player_;
  int dealer_up_ = 0;
  bool done_ = true;
};

}  // namespace rglab::envs
