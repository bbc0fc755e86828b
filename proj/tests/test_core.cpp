#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rglab/core/format.hpp"
#include "rglab/core/slate.hpp"
#include "rglab/core/types.hpp"

using namespace rglab;

TEST_CASE("transition reward bookkeeping") {
  Observation s{{1.0}, "s", "env"};
  Observation n{{2.0}, "n", "env"};

  SUBCASE("zero shift leaves the intrinsic value untouched bit for bit") {
    const Transition t = Transition::make(s, 0, 0.1, 0, 1.0, n, false);
    CHECK(t.reward == 0.1);
    CHECK(t.intrinsic_reward == 0.1);
    CHECK(t.shift == 0);
  }
  SUBCASE("shift adds exactly shift * scale") {
    const Transition up = Transition::make(s, 1, 2.0, 1, 0.5, n, true);
    CHECK(up.reward == 2.5);
    const Transition down = Transition::make(s, 1, 2.0, -1, 0.5, n, true);
    CHECK(down.reward == 1.5);
  }
  SUBCASE("recomputing the same expression reproduces the stored reward") {
    const Transition t = Transition::make(s, 0, 0.37, -1, 1.25, n, false);
    CHECK(t.reward == t.intrinsic_reward + t.shift * 1.25);
  }
}

TEST_CASE("observation equality covers all fields") {
  Observation a{{1.0, 2.0}, "text", "cartpole"};
  Observation b = a;
  CHECK(a == b);
  b.box[1] = 2.5;
  CHECK_FALSE(a == b);
  b = a;
  b.human = "other";
  CHECK_FALSE(a == b);
}

TEST_CASE("format_fixed is canonical") {
  CHECK(format_fixed(1.25, 2) == "1.25");
  CHECK(format_fixed(-0.0001, 2) == "0.00");
  CHECK(format_fixed(-1.5, 1) == "-1.5");
  CHECK(format_fixed(3.0, 0) == "3");
}

TEST_CASE("slate spec enumerates combinations lexicographically") {
  const SlateSpec spec = SlateSpec::build({0.0, 0.25, 0.5, 0.75, 1.0}, 2);
  CHECK(spec.action_count() == 10);
  CHECK(spec.slate_for(0) == std::vector<int>{0, 1});
  CHECK(spec.slate_for(9) == std::vector<int>{3, 4});
  CHECK(spec.action_for({1, 3}) == spec.action_for({3, 1}));
  CHECK(spec.slate_for(spec.action_for({3, 1})) == std::vector<int>{1, 3});
}

TEST_CASE("slate spec rejects duplicates and bad actions") {
  const SlateSpec spec = SlateSpec::build({0.0, 0.5, 1.0}, 2);
  CHECK_THROWS_AS(spec.action_for({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(spec.slate_for(-1), std::invalid_argument);
  CHECK_THROWS_AS(spec.slate_for(spec.action_count()), std::invalid_argument);
}

TEST_CASE("slate choice weights follow e^(1-k)") {
  const SlateSpec spec = SlateSpec::build({0.0, 1.0}, 1);
  CHECK(spec.choice_weight(0) == doctest::Approx(std::exp(1.0)));
  CHECK(spec.choice_weight(1) == doctest::Approx(1.0));
  CHECK(spec.mean_kaleness(0) == doctest::Approx(0.0));
}

TEST_CASE("transitions reject out-of-support shifts") {
  Observation s{{1.0}, "s", "env"};
  CHECK_THROWS_AS(Transition::make(s, 0, 0.0, 2, 1.0, s, false), std::invalid_argument);
  CHECK_THROWS_AS(Transition::make(s, 0, 0.0, -2, 1.0, s, false), std::invalid_argument);
}
