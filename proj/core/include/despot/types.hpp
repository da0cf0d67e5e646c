#pragma once

#include <cstdint>

namespace despot {

using State = std::int32_t;
using Action = std::int32_t;
using Obs = std::int32_t;

// Sentinel for episodes that have ended. Domains may also mark regular
// state indices as terminal (e.g. Tag's "tagged" states).
inline constexpr State kTerminalState = -1;

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

}  // namespace despot
