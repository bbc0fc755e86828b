#pragma once

#include <array>
#include <vector>

namespace rglab::guidance {

// Action values of one blackjack decision cell under optimal continuation.
struct StrategyCell {
  double q_stick = 0.0;
  double q_hit = 0.0;

  int optimal_action() const { return q_hit > q_stick ? 1 : 0; }
  double gap() const { return q_hit > q_stick ? q_hit - q_stick : q_stick - q_hit; }
};

// Exact expectimax solution of the infinite-deck hit/stand game the
// blackjack environment plays: cards 1..9 at 1/13 and 10 at 4/13, dealer
// stands on every 17, wins pay +1. Built once by backward induction over
// player totals with the dealer outcome distribution computed per up card.
class BasicStrategyTable {
 public:
  static BasicStrategyTable build();

  // player_sum in 4..21 (hard) or 12..21 (usable ace), dealer_up in 1..10.
  const StrategyCell& cell(int player_sum, bool usable_ace, int dealer_up) const;
  int optimal_action(int player_sum, bool usable_ace, int dealer_up) const;
  double gap(int player_sum, bool usable_ace, int dealer_up) const;

  // P(dealer final total = 17..21 or bust) given the up card.
  const std::array<double, 6>& dealer_distribution(int dealer_up) const;

  // Expected return of the whole game under optimal play, over the initial
  // two-card deal and dealer up card.
  double optimal_game_value() const;

  struct CellRef {
    int player_sum;
    bool usable_ace;
    int dealer_up;
  };
  // Every cell the table covers, in a fixed order.
  std::vector<CellRef> all_cells() const;

 private:
  BasicStrategyTable() = default;
  static bool valid_cell(int player_sum, bool usable_ace, int dealer_up);

  // [usable_ace][player_sum][dealer_up]
  StrategyCell cells_[2][22][11] = {};
  std::array<double, 6> dealer_dist_[11] = {};
};

}  // namespace rglab::guidance
