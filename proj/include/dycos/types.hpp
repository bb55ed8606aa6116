#pragma once

#include <cstdint>

namespace dycos {

// Dense ids assigned at insertion; never reused after removal.
using NodeId = std::uint32_t;
// Index into the graph's append-only label dictionary.
using Label = std::uint32_t;
// Index into the graph's append-only word dictionary.
using WordId = std::uint32_t;
// Monotone mutation counter of a graph instance.
using Revision = std::uint64_t;

// How walks traverse stored directed edges.
enum class Direction { out_only, undirected };

}  // namespace dycos
