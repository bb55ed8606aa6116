#include "dycos/walk.hpp"

#include <algorithm>

namespace dycos {

std::optional<NodeId> structural_hop(const DynamicGraph& graph, NodeId v, Rng& rng) {
    const std::span<const NodeId> neighbors = graph.out_neighbors(v);
    if (neighbors.empty()) return std::nullopt;
    return neighbors[rng.next_index(neighbors.size())];
}

std::unordered_map<NodeId, std::uint32_t> two_hop_path_counts(const DynamicGraph& graph,
                                                              const Vocabulary& vocabulary,
                                                              NodeId v) {
    std::unordered_map<NodeId, std::uint32_t> counts;
    for (const auto& [wid, count] : graph.word_counts(v)) {
        (void)count;
        const Vocabulary::Entry* entry = vocabulary.find(wid);
        if (!entry) continue;
        for (NodeId target : entry->postings) ++counts[target];
    }
    return counts;
}

CandidateSet top_q(const std::unordered_map<NodeId, std::uint32_t>& counts, std::uint32_t q) {
    CandidateSet result;
    result.items.reserve(counts.size());
    for (const auto& [node, paths] : counts) result.items.push_back({node, paths});
    std::sort(result.items.begin(), result.items.end(), [](const Candidate& a, const Candidate& b) {
        if (a.paths != b.paths) return a.paths > b.paths;
        return a.node < b.node;
    });
    if (result.items.size() > q) result.items.resize(q);
    for (const Candidate& c : result.items) result.total_paths += c.paths;
    return result;
}

NodeId sample_candidate(const CandidateSet& candidates, Rng& rng) {
    const double u = rng.next_double() * static_cast<double>(candidates.total_paths);
    std::uint64_t cumulative = 0;
    for (const Candidate& c : candidates.items) {
        cumulative += c.paths;
        if (static_cast<double>(cumulative) > u) return c.node;
    }
    return candidates.items.back().node;  // guards against rounding at the top end
}

std::optional<NodeId> content_two_hop(const DynamicGraph& graph, const Vocabulary& vocabulary,
                                      NodeId v, std::uint32_t q, Rng& rng) {
    const CandidateSet candidates = top_q(two_hop_path_counts(graph, vocabulary, v), q);
    if (candidates.items.empty()) return std::nullopt;
    return sample_candidate(candidates, rng);
}

WalkContext::WalkContext(const DynamicGraph& graph, const Vocabulary& vocabulary, std::uint32_t q)
    : graph_(graph), vocabulary_(vocabulary), q_(q), scratch_(graph.id_upper_bound(), 0) {}

const CandidateSet& WalkContext::candidates(NodeId v) {
    auto it = cache_.find(v);
    if (it != cache_.end()) return it->second;

    for (const auto& [wid, count] : graph_.word_counts(v)) {
        (void)count;
        const Vocabulary::Entry* entry = vocabulary_.find(wid);
        if (!entry) continue;
        for (NodeId target : entry->postings) {
            if (scratch_[target] == 0) touched_.push_back(target);
            ++scratch_[target];
        }
    }

    CandidateSet set;
    set.items.reserve(touched_.size());
    for (NodeId target : touched_) {
        set.items.push_back({target, scratch_[target]});
        scratch_[target] = 0;
    }
    touched_.clear();
    std::sort(set.items.begin(), set.items.end(), [](const Candidate& a, const Candidate& b) {
        if (a.paths != b.paths) return a.paths > b.paths;
        return a.node < b.node;
    });
    if (set.items.size() > q_) set.items.resize(q_);
    for (const Candidate& c : set.items) set.total_paths += c.paths;
    return cache_.emplace(v, std::move(set)).first->second;
}

std::optional<NodeId> WalkContext::content(NodeId v, Rng& rng) {
    const CandidateSet& set = candidates(v);
    if (set.items.empty()) return std::nullopt;
    return sample_candidate(set, rng);
}

}  // namespace dycos
