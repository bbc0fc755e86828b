#include "rglab/core/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rglab {

namespace {

constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix_scramble(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

RngStream::RngStream(std::uint64_t seed, std::string_view label)
    : state_(splitmix_scramble(seed ^ fnv1a64(label))),
      seed_(seed),
      label_(label) {}

std::uint64_t RngStream::next_u64() {
  state_ += kSplitMixGamma;
  return splitmix_scramble(state_);
}

double RngStream::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int RngStream::next_int(int n) {
  if (n <= 0) throw std::invalid_argument("RngStream::next_int: n must be positive");
  // Lemire multiply-shift; the modulo bias at n << 2^64 is negligible.
  return static_cast<int>(
      (static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(n)) >> 64);
}

double RngStream::next_gaussian(double mean, double stddev) {
  if (stddev < 0.0) throw std::invalid_argument("RngStream::next_gaussian: negative stddev");
  if (stddev == 0.0) return mean;
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double radius = std::sqrt(-2.0 * std::log(1.0 - u1));
  return mean + stddev * radius * std::cos(2.0 * std::numbers::pi * u2);
}

int RngStream::next_weighted(const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("RngStream::next_weighted: negative weight");
    total += w;
  }
  if (weights.empty() || total <= 0.0) {
    throw std::invalid_argument("RngStream::next_weighted: no positive weight");
  }
  const double target = next_uniform() * total;
  double cumulative = 0.0;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    cumulative += weights[i];
    if (target < cumulative) return static_cast<int>(i);
  }
  return static_cast<int>(weights.size() - 1);
}

int RngStream::next_geometric(double success_prob, int max_trials) {
  if (success_prob <= 0.0 || success_prob > 1.0) {
    throw std::invalid_argument("RngStream::next_geometric: probability out of (0, 1]");
  }
  if (max_trials < 1) throw std::invalid_argument("RngStream::next_geometric: max_trials < 1");
  if (success_prob == 1.0) {
    next_uniform();  // keep draw count independent of the parameter
    return 1;
  }
  const double u = next_uniform();
  const int trials = 1 + static_cast<int>(std::floor(std::log1p(-u) / std::log1p(-success_prob)));
  return std::min(std::max(trials, 1), max_trials);
}

}  // namespace rglab
