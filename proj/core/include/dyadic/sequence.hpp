#pragma once

#include <cstdint>
#include <map>

namespace dyadic {

enum class Mode { dyadic, classical };

const char* to_string(Mode mode);

/// Finitely supported sequence index -> value. Dyadic sequences live on the
/// half-line (indices >= 0); classical ones may use negative indices.
class Sequence {
public:
  explicit Sequence(Mode mode = Mode::dyadic) : mode_(mode) {}

  static Sequence delta(Mode mode = Mode::dyadic);
  /// delta(. (-) k): the single entry 1 at index k.
  static Sequence shifted_delta(std::int64_t k, Mode mode = Mode::dyadic);

  void set(std::int64_t index, double value);
  void add(std::int64_t index, double value);
  double at(std::int64_t index) const;

  const std::map<std::int64_t, double>& entries() const { return entries_; }
  Mode mode() const { return mode_; }
  bool empty() const { return entries_.empty(); }

private:
  void check_index(std::int64_t index) const;

  std::map<std::int64_t, double> entries_;
  Mode mode_;
};

}  // namespace dyadic
