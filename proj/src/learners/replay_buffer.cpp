#include "rglab/learners/replay_buffer.hpp"

#include <stdexcept>

namespace rglab::learners {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw std::invalid_argument("ReplayBuffer: zero capacity");
  items_.reserve(capacity);
}

void ReplayBuffer::push(Transition t) {
  if (items_.size() < capacity_) {
    items_.push_back(std::move(t));
    return;
  }
  items_[cursor_] = std::move(t);
  cursor_ = (cursor_ + 1) % capacity_;
}

std::vector<Transition> ReplayBuffer::sample(std::size_t batch_size, RngStream& stream) const {
  if (items_.empty()) throw std::logic_error("ReplayBuffer::sample: empty buffer");
  std::vector<Transition> batch;
  batch.reserve(batch_size);
  for (std::size_t i = 0; i < batch_size; ++i) {
    batch.push_back(items_[static_cast<std::size_t>(stream.next_int(static_cast<int>(items_.size())))]);
  }
  return batch;
}

const Transition& ReplayBuffer::at(std::size_t logical_index) const {
  if (logical_index >= items_.size()) throw std::out_of_range("ReplayBuffer::at");
  if (items_.size() < capacity_) return items_[logical_index];
  return items_[(cursor_ + logical_index) % capacity_];
}

}  // namespace rglab::learners
