#include "dyadic/sequence.hpp"

#include "dyadic/errors.hpp"

namespace dyadic {

const char* to_string(Mode mode) {
  return mode == Mode::dyadic ? "dyadic" : "classical";
}

Sequence Sequence::delta(Mode mode) { return shifted_delta(0, mode); }

Sequence Sequence::shifted_delta(std::int64_t k, Mode mode) {
  Sequence s(mode);
  s.set(k, 1.0);
  return s;
}

void Sequence::set(std::int64_t index, double value) {
  check_index(index);
  if (value == 0.0) {
    entries_.erase(index);
  } else {
    entries_[index] = value;
  }
}

void Sequence::add(std::int64_t index, double value) {
  check_index(index);
  auto it = entries_.find(index);
  if (it == entries_.end()) {
    if (value != 0.0) entries_[index] = value;
    return;
  }
  it->second += value;
  if (it->second == 0.0) entries_.erase(it);
}

double Sequence::at(std::int64_t index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? 0.0 : it->second;
}

void Sequence::check_index(std::int64_t index) const {
  if (mode_ == Mode::dyadic && index < 0) {
    throw Error("dyadic sequences live on the half-line (index >= 0)");
  }
}

}  // namespace dyadic
