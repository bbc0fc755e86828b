#include "rglab/envs/blackjack.hpp"

#include <stdexcept>
#include <string>

namespace rglab::envs {

HandTotal add_card(HandTotal hand, int card) {
  if (card == 1 && !hand.usable_ace && hand.total + 11 <= 21) {
    hand.total += 11;
    hand.usable_ace = true;
    return hand;
  }
  hand.total += card;
  if (hand.total > 21 && hand.usable_ace) {
    hand.total -= 10;
    hand.usable_ace = false;
  }
  return hand;
}

int settle(int player_total, int dealer_total) {
  if (player_total > dealer_total) return 1;
  if (player_total < dealer_total) return -1;
  return 0;
}

int BlackjackEnv::draw_card(RngStream& stream) {
  const int r = stream.next_int(13);
  return r >= 9 ? 10 : r + 1;
}

Observation BlackjackEnv::observe() const {
  Observation obs;
  obs.box = {static_cast<double>(player_.total), static_cast<double>(dealer_up_),
             player_.usable_ace ? 1.0 : 0.0};
  obs.env_id = id_;
  const std::string dealer = dealer_up_ == 1 ? "an ace" : "a " + std::to_string(dealer_up_);
  obs.human = "Player hand totals " + std::to_string(player_.total) +
              (player_.usable_ace ? " with a usable ace" : " with no usable ace") +
              "; dealer shows " + dealer + ".";
  return obs;
}

Observation BlackjackEnv::reset(RngStream& stream) {
  player_ = add_card(add_card(HandTotal{}, draw_card(stream)), draw_card(stream));
  dealer_up_ = draw_card(stream);
  done_ = false;
  return observe();
}

Observation BlackjackEnv::reset_to(int player_sum, int dealer_up, bool usable_ace) {
  if (player_sum < 4 || player_sum > 21 || dealer_up < 1 || dealer_up > 10 ||
      (usable_ace && player_sum < 12)) {
    throw std::invalid_argument("BlackjackEnv::reset_to: unreachable state");
  }
  player_ = HandTotal{player_sum, usable_ace};
  dealer_up_ = dealer_up;
  done_ = false;
  return observe();
}

StepResult BlackjackEnv::step(int action, RngStream& stream) {
  if (action < 0 || action >= action_count()) {
    throw std::invalid_argument("BlackjackEnv::step: action out of range");
  }
  if (done_) throw std::logic_error("BlackjackEnv::step: episode already terminal");

  if (action == 1) {  // hit
    player_ = add_card(player_, draw_card(stream));
    if (player_.total > 21) {
      done_ = true;
      return StepResult{observe(), -1.0, true};
    }
    return StepResult{observe(), 0.0, false};
  }

  // stick: dealer draws to 17 or more, standing on soft 17
  HandTotal dealer = add_card(HandTotal{}, dealer_up_);
  while (dealer.total < 17) dealer = add_card(dealer, draw_card(stream));
  done_ = true;
  const double reward =
      dealer.total > 21 ? 1.0 : static_cast<double>(settle(player_.total, dealer.total));
  return StepResult{observe(), reward, true};
}

std::uint64_t BlackjackEnv::state_key(const Observation& obs) const {
  const int player = static_cast<int>(obs.box[0]);
  const int dealer = static_cast<int>(obs.box[1]);
  const int ace = obs.box[2] != 0.0 ? 1 : 0;
  return static_cast<std::uint64_t>((player - 4) * 20 + (dealer - 1) * 2 + ace);
}

std::string BlackjackEnv::action_name(const Observation&, int action) const {
  return action == 0 ? "stick" : "hit";
}

std::string BlackjackEnv::task_card() const {
  return "One decision in a game of blackjack played against the dealer with an infinite "
         "deck. The player sees their hand total, whether they hold a usable ace, and the "
         "dealer's face-up card, then chooses to hit (draw another card) or stick (stop and "
         "let the dealer draw to 17). Going over 21 loses immediately; otherwise the higher "
         "final total wins.";
}

}  // namespace rglab::envs
