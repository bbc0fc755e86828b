#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace rglab::learners {

// Classic tile coding over a bounded box: `tilings` overlapping grids of
// `bins` cells per dimension, each grid displaced by a different fraction
// of a tile width (odd multipliers per dimension). Inputs are clamped to
// the configured ranges. Exactly one feature per tiling is active.
class TileCoder {
 public:
  TileCoder(std::vector<std::pair<double, double>> ranges, int bins, int tilings);

  int feature_count() const { return feature_count_; }
  int tilings() const { return tilings_; }

  std::vector<int> active_features(const std::vector<double>& box) const;

 private:
  std::vector<std::pair<double, double>> ranges_;
  int bins_;
  int tilings_;
  int feature_count_;
};

}  // namespace rglab::learners
