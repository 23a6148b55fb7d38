#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace airtime {

enum class NodeId : std::uint32_t {};

constexpr NodeId node_id(std::uint32_t v) { return NodeId{v}; }
constexpr std::uint32_t to_int(NodeId id) { return static_cast<std::uint32_t>(id); }
inline std::string to_string(NodeId id) { return std::to_string(to_int(id)); }

enum class Role { go, client };

}  // namespace airtime
