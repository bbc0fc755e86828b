#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rglab {

// 64-bit FNV-1a. Used for stream labels, verdict cache keys and config hashes.
std::uint64_t fnv1a64(std::string_view text);

// Deterministic pseudo-random stream built on SplitMix64 (a splittable,
// counter-style 64-bit generator). A stream is fully determined by its
// (seed, label) pair: the label is hashed into the initial counter, so
// differently labelled streams under one seed never share state and never
// touch any global generator.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::string_view label);

  std::uint64_t seed() const { return seed_; }
  const std::string& label() const { return label_; }

  std::uint64_t next_u64();

  // Uniform deviate in [0, 1), 53 mantissa bits.
  double next_uniform();

  // Uniform integer in [0, n). n must be positive.
  int next_int(int n);

  // Gaussian deviate via the basic Box-Muller transform: two uniform draws,
  // z = sqrt(-2 ln(1-u1)) * cos(2*pi*u2). stddev == 0 returns mean exactly
  // and consumes no draws; stddev < 0 is an argument error.
  double next_gaussian(double mean, double stddev);

  // Index sampled proportionally to the given nonnegative weights.
  // Consumes exactly one uniform draw. Empty or all-zero weights are an
  // argument error.
  int next_weighted(const std::vector<double>& weights);

  // Number of Bernoulli(success_prob) trials up to and including the first
  // success (support {1, 2, ...}), capped at max_trials. Sampled by
  // inversion from a single uniform draw.
  int next_geometric(double success_prob, int max_trials);

 private:
  std::uint64_t state_;
  std::uint64_t seed_;
  std::string label_;
};

}  // namespace rglab
