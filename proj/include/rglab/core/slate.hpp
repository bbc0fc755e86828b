#pragma once

#include <cstdint>
#include <vector>

namespace rglab {

// Static description of a slate action space: every size-m subset of the
// candidate items, enumerated lexicographically, one discrete action per
// subset. Slate environments expose one of these so slate learners and
// scripted evaluators can decode action indices without knowing the
// environment concretely.
struct SlateSpec {
  std::vector<double> item_kaleness;   // per candidate item, in [0, 1]
  int slate_size = 0;
  std::vector<std::vector<int>> combos;  // each sorted ascending

  static SlateSpec build(std::vector<double> item_kaleness, int slate_size);

  int action_count() const { return static_cast<int>(combos.size()); }
  const std::vector<int>& slate_for(int action) const;

  // Inverse of slate_for. Items must be distinct; duplicates are an
  // argument error.
  int action_for(std::vector<int> items) const;

  // Unnormalized selection weight e^{1 - kaleness} of one item.
  double choice_weight(int item) const;

  double mean_kaleness(int action) const;
};

}  // namespace rglab
