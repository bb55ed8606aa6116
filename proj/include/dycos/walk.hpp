#pragma once
// Single-hop primitives over the extended graph: uniform structural hops and
// content two-hops (structural -> word -> structural, restricted to the top-q
// targets by path count and sampled proportionally to path count).

#include <optional>
#include <unordered_map>
#include <vector>

#include "dycos/graph.hpp"
#include "dycos/rng.hpp"
#include "dycos/types.hpp"

namespace dycos {

struct WalkConfig {
    std::uint32_t walks = 10;       // walks started per node
    std::uint32_t walk_length = 5;  // hops per walk
    double p_structural = 0.5;      // probability of a structural hop per step
    std::uint32_t top_q = 10;       // candidate cap for content two-hops
};

struct Candidate {
    NodeId node = 0;
    std::uint32_t paths = 0;  // distinct word nodes linking source and target
};

// Top-q two-hop targets of one source node, ordered by (paths desc, node asc).
struct CandidateSet {
    std::vector<Candidate> items;
    std::uint64_t total_paths = 0;  // sum of paths over items
};

// Uniform choice among v's traversal neighbors; nullopt when v has none.
std::optional<NodeId> structural_hop(const DynamicGraph& graph, NodeId v, Rng& rng);

// p(v, v') for every v' reachable by a length-2 path through a word node:
// the number of distinct vocabulary words shared by v and v'. Includes v
// itself; empty when v's text touches no vocabulary word.
std::unordered_map<NodeId, std::uint32_t> two_hop_path_counts(const DynamicGraph& graph,
                                                              const Vocabulary& vocabulary,
                                                              NodeId v);

// The q highest-count entries, ties at the cut broken by ascending node id.
CandidateSet top_q(const std::unordered_map<NodeId, std::uint32_t>& counts, std::uint32_t q);

// Pick from the candidate set with probability paths / total_paths via
// cumulative inversion in canonical order. Requires a non-empty set.
NodeId sample_candidate(const CandidateSet& candidates, Rng& rng);
std::optional<NodeId> content_two_hop(const DynamicGraph& graph, const Vocabulary& vocabulary,
                                      NodeId v, std::uint32_t q, Rng& rng);

// Reusable per-worker scratch: a dense path-count accumulator sized to the
// graph's id range plus a cache of computed candidate sets. Candidate sets
// depend only on texts and the installed vocabulary, never on labels, so a
// cache entry stays valid for the whole classification pass.
class WalkContext {
public:
    WalkContext(const DynamicGraph& graph, const Vocabulary& vocabulary, std::uint32_t q);

    const CandidateSet& candidates(NodeId v);
    std::optional<NodeId> structural(NodeId v, Rng& rng) const {
        return structural_hop(graph_, v, rng);
    }
    std::optional<NodeId> content(NodeId v, Rng& rng);

    const DynamicGraph& graph() const { return graph_; }

private:
    const DynamicGraph& graph_;
    const Vocabulary& vocabulary_;
    std::uint32_t q_;
    std::vector<std::uint32_t> scratch_;  // indexed by NodeId, zeroed between uses
    std::vector<NodeId> touched_;
    std::unordered_map<NodeId, CandidateSet> cache_;
};

}  // namespace dycos
