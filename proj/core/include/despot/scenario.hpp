#pragma once

#include <cstdint>
#include <vector>

#include "despot/rng.hpp"
#include "despot/types.hpp"

namespace despot {

// A scenario determinizes one possible future: a start state plus an
// infinite stream of uniform numbers phi_1, phi_2, ...  The draw at depth t
// is a pure function of (seed, scenario_id, t), which makes streams lazy,
// replayable, and independent across (scenario_id, t) pairs.
class ScenarioStream {
 public:
  ScenarioStream() = default;
  ScenarioStream(State start, std::uint32_t id, std::uint64_t seed)
      : start_(start), id_(id), seed_(seed) {}

  State start_state() const { return start_; }
  std::uint32_t scenario_id() const { return id_; }
  std::uint64_t seed() const { return seed_; }

  // phi_t for t >= 1, uniform on [0, 1).
  double phi(int t) const {
    const std::uint64_t id_seed =
        mix64(seed_ ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t{id_} + 1)));
    return unit_double(mix64(id_seed ^ static_cast<std::uint64_t>(t)));
  }

 private:
  State start_ = kTerminalState;
  std::uint32_t id_ = 0;
  std::uint64_t seed_ = 0;
};

// A scenario's position inside a search: index into the stream table plus
// the state it has reached.
struct ScenarioAt {
  std::int32_t idx;
  State state;
};

// Splits one uniform draw into independent sub-draws, for domains whose
// step consumes more than one random choice.
inline double phi_sub(double phi, std::uint32_t k) {
  const auto bits = static_cast<std::uint64_t>(phi * 0x1.0p53);
  return unit_double(mix64(bits ^ mix64(0x51ed2701ULL + k)));
}

}  // namespace despot
