#pragma once

#include <cstdint>
#include <limits>

namespace lmc {

using NodeID = std::uint32_t;
using EdgeID = std::uint64_t;
using NetID = std::uint32_t;
using BlockID = std::uint8_t;

// Node, edge and net weights are exact integers; conductance values are only
// formed as doubles at evaluation time.
using Weight = std::int64_t;

inline constexpr NodeID kInvalidNode = std::numeric_limits<NodeID>::max();

} // namespace lmc
