#include "rglab/learners/tile_coding.hpp"

#include <cmath>
#include <stdexcept>

namespace rglab::learners {

TileCoder::TileCoder(std::vector<std::pair<double, double>> ranges, int bins, int tilings)
    : ranges_(std::move(ranges)), bins_(bins), tilings_(tilings) {
  if (ranges_.empty() || bins < 1 || tilings < 1) {
    throw std::invalid_argument("TileCoder: bad geometry");
  }
  int cells = 1;
  for (std::size_t d = 0; d < ranges_.size(); ++d) cells *= bins_;
  feature_count_ = cells * tilings_;
}

std::vector<int> TileCoder::active_features(const std::vector<double>& box) const {
  if (box.size() != ranges_.size()) {
    throw std::invalid_argument("TileCoder::active_features: dimension mismatch");
  }
  std::vector<int> features(static_cast<std::size_t>(tilings_));
  const int cells_per_tiling = feature_count_ / tilings_;
  for (int t = 0; t < tilings_; ++t) {
    int index = 0;
    for (std::size_t d = 0; d < ranges_.size(); ++d) {
      const auto [lo, hi] = ranges_[d];
      double unit = (box[d] - lo) / (hi - lo) * bins_;
      unit += static_cast<double>(t) * static_cast<double>(2 * d + 1) / tilings_;
      int bin = static_cast<int>(std::floor(unit));
      bin = std::min(std::max(bin, 0), bins_ - 1);
      index = index * bins_ + bin;
    }
    features[static_cast<std::size_t>(t)] = t * cells_per_tiling + index;
  }
  return features;
}

}  // namespace rglab::learners
