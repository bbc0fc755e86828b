#include "rglab/core/slate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rglab {

SlateSpec SlateSpec::build(std::vector<double> item_kaleness, int slate_size) {
  const int n = static_cast<int>(item_kaleness.size());
  if (slate_size < 1 || slate_size > n) {
    throw std::invalid_argument("SlateSpec: slate_size out of range");
  }
  SlateSpec spec;
  spec.item_kaleness = std::move(item_kaleness);
  spec.slate_size = slate_size;

  std::vector<int> combo(slate_size);
  for (int i = 0; i < slate_size; ++i) combo[i] = i;
  while (true) {
    spec.combos.push_back(combo);
    int i = slate_size - 1;
    while (i >= 0 && combo[i] == n - slate_size + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < slate_size; ++j) combo[j] = combo[j - 1] + 1;
  }
  return spec;
}

const std::vector<int>& SlateSpec::slate_for(int action) const {
  if (action < 0 || action >= action_count()) {
    throw std::invalid_argument("SlateSpec::slate_for: action out of range");
  }
  return combos[static_cast<std::size_t>(action)];
}

int SlateSpec::action_for(std::vector<int> items) const {
  std::sort(items.begin(), items.end());
  if (std::adjacent_find(items.begin(), items.end()) != items.end()) {
    throw std::invalid_argument("SlateSpec::action_for: duplicate doc indices in slate");
  }
  for (int i = 0; i < action_count(); ++i) {
    if (combos[static_cast<std::size_t>(i)] == items) return i;
  }
  throw std::invalid_argument("SlateSpec::action_for: no such slate");
}

double SlateSpec::choice_weight(int item) const {
  return std::exp(1.0 - item_kaleness.at(static_cast<std::size_t>(item)));
}

double SlateSpec::mean_kaleness(int action) const {
  const auto& slate = slate_for(action);
  double sum = 0.0;
  for (int item : slate) sum += item_kaleness[static_cast<std::size_t>(item)];
  return sum / static_cast<double>(slate.size());
}

}  // namespace rglab
