#include "rglab/learners/config.hpp"

#include <cmath>

namespace rglab::learners {

double EpsilonSchedule::value(long step) const {
  if (start <= end) return start;          // constant schedule
  if (decay_steps <= 0) return start;      // auto horizon not resolved yet
  if (step >= decay_steps) return end;
  const double fraction = static_cast<double>(step) / static_cast<double>(decay_steps);
  return start * std::pow(end / start, fraction);
}

}  // namespace rglab::learners
