#include "rglab/guidance/blackjack_oracle.hpp"

#include <functional>
#include <stdexcept>

#include "rglab/envs/blackjack.hpp"

namespace rglab::guidance {

namespace {

constexpr double kCardProb[11] = {0.0,      1.0 / 13, 1.0 / 13, 1.0 / 13, 1.0 / 13, 1.0 / 13,
                                  1.0 / 13, 1.0 / 13, 1.0 / 13, 1.0 / 13, 4.0 / 13};

// Distribution over dealer final totals {17..21, bust} from a partial hand.
std::array<double, 6> dealer_outcomes(envs::HandTotal hand) {
  if (hand.total >= 17) {
    std::array<double, 6> out{};
    out[static_cast<std::size_t>(std::min(hand.total, 22) - 17)] = 1.0;
    return out;
  }
  std::array<double, 6> out{};
  for (int card = 1; card <= 10; ++card) {
    const auto next = dealer_outcomes(envs::add_card(hand, card));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += kCardProb[card] * next[i];
  }
  return out;
}

}  // namespace

bool BasicStrategyTable::valid_cell(int player_sum, bool usable_ace, int dealer_up) {
  if (dealer_up < 1 || dealer_up > 10) return false;
  if (usable_ace) return player_sum >= 12 && player_sum <= 21;
  return player_sum >= 4 && player_sum <= 21;
}

BasicStrategyTable BasicStrategyTable::build() {
  BasicStrategyTable table;

  for (int up = 1; up <= 10; ++up) {
    table.dealer_dist_[up] = dealer_outcomes(envs::add_card(envs::HandTotal{}, up));
  }

  // q_stick straight from the dealer distribution; q_hit by memoized
  // recursion over the player's possible next hands. The state graph is
  // acyclic: hard totals only climb, and a soft hand that demotes lands on
  // a hard total of 12+ which can never turn soft again.
  bool solved[2][22][11] = {};
  std::function<const StrategyCell&(int, bool, int)> solve =
      [&](int player, bool ace, int up) -> const StrategyCell& {
    StrategyCell& c = table.cells_[ace ? 1 : 0][player][up];
    if (solved[ace ? 1 : 0][player][up]) return c;

    const auto& dealer = table.dealer_dist_[up];
    double stick = dealer[5];  // dealer bust
    for (int final = 17; final <= 21; ++final) {
      stick += dealer[static_cast<std::size_t>(final - 17)] * envs::settle(player, final);
    }
    c.q_stick = stick;

    double hit = 0.0;
    for (int card = 1; card <= 10; ++card) {
      const envs::HandTotal next = envs::add_card(envs::HandTotal{player, ace}, card);
      if (next.total > 21) {
        hit -= kCardProb[card];
      } else {
        const StrategyCell& nc = solve(next.total, next.usable_ace, up);
        hit += kCardProb[card] * (nc.q_hit > nc.q_stick ? nc.q_hit : nc.q_stick);
      }
    }
    c.q_hit = hit;
    solved[ace ? 1 : 0][player][up] = true;
    return c;
  };

  for (int up = 1; up <= 10; ++up) {
    for (int player = 12; player <= 21; ++player) solve(player, true, up);
    for (int player = 4; player <= 21; ++player) solve(player, false, up);
  }
  return table;
}

const StrategyCell& BasicStrategyTable::cell(int player_sum, bool usable_ace,
                                             int dealer_up) const {
  if (!valid_cell(player_sum, usable_ace, dealer_up)) {
    throw std::invalid_argument("BasicStrategyTable::cell: state outside the table");
  }
  return cells_[usable_ace ? 1 : 0][player_sum][dealer_up];
}

int BasicStrategyTable::optimal_action(int player_sum, bool usable_ace, int dealer_up) const {
  return cell(player_sum, usable_ace, dealer_up).optimal_action();
}

double BasicStrategyTable::gap(int player_sum, bool usable_ace, int dealer_up) const {
  return cell(player_sum, usable_ace, dealer_up).gap();
}

const std::array<double, 6>& BasicStrategyTable::dealer_distribution(int dealer_up) const {
  if (dealer_up < 1 || dealer_up > 10) {
    throw std::invalid_argument("BasicStrategyTable::dealer_distribution: bad up card");
  }
  return dealer_dist_[dealer_up];
}

double BasicStrategyTable::optimal_game_value() const {
  double ev = 0.0;
  for (int c1 = 1; c1 <= 10; ++c1) {
    for (int c2 = 1; c2 <= 10; ++c2) {
      const envs::HandTotal hand = envs::add_card(envs::add_card(envs::HandTotal{}, c1), c2);
      for (int up = 1; up <= 10; ++up) {
        const StrategyCell& c = cell(hand.total, hand.usable_ace, up);
        ev += kCardProb[c1] * kCardProb[c2] * kCardProb[up] *
              (c.q_hit > c.q_stick ? c.q_hit : c.q_stick);
      }
    }
  }
  return ev;
}

std::vector<BasicStrategyTable::CellRef> BasicStrategyTable::all_cells() const {
  std::vector<CellRef> cells;
  for (int player = 4; player <= 21; ++player) {
    for (int up = 1; up <= 10; ++up) cells.push_back({player, false, up});
  }
  for (int player = 12; player <= 21; ++player) {
    for (int up = 1; up <= 10; ++up) cells.push_back({player, true, up});
  }
  return cells;
}

}  // namespace rglab::guidance
