#pragma once

#include <vector>

#include "rglab/core/rng.hpp"
#include "rglab/core/types.hpp"

namespace rglab::learners {

// Fixed-capacity ring of transitions with FIFO eviction. Sampling draws
// uniformly with replacement from whatever stream the caller provides; the
// training loop always passes the policy stream.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return items_.size(); }

  void push(Transition t);

  std::vector<Transition> sample(std::size_t batch_size, RngStream& stream) const;

  const Transition& at(std::size_t logical_index) const;  // 0 = oldest

 private:
  std::size_t capacity_;
  std::size_t cursor_ = 0;
  std::vector<Transition> items_;
};

}  // namespace rglab::learners
