#pragma once
// Node classification by seeded random walks: run `walks` walks of
// `walk_length` hops from each unlabeled node, tally the labels of visited
// nodes, assign the majority label (uniform among ties), and fall back to the
// graph-wide most frequent labels when no labeled node was seen.

#include <optional>
#include <span>
#include <vector>

#include "dycos/graph.hpp"
#include "dycos/rng.hpp"
#include "dycos/walk.hpp"

namespace dycos {

enum class AssignmentSource { walk_majority, global_fallback };

// batch: all nodes are classified against the same labeling snapshot and the
// results applied afterwards. immediate: each assignment becomes visible to
// subsequent nodes' walks (ascending node order, sequential).
enum class ClassifyMode { batch, immediate };

const char* to_string(AssignmentSource source);

struct LabelDistribution {
    std::vector<std::uint64_t> counts;  // indexed by Label
    std::uint64_t total_visits = 0;
};

struct Assignment {
    NodeId node = 0;
    Label label = 0;
    AssignmentSource source = AssignmentSource::walk_majority;
    double confidence = 0.0;  // max count / total visits; 0 for fallback
    Revision assigned_at = 0;
    std::optional<std::uint32_t> ttl;
};

// Hop-type tallies accumulated across walks (one counter bump per hop).
struct WalkStats {
    std::uint64_t structural_hops = 0;
    std::uint64_t content_hops = 0;
    std::uint64_t fallback_structural = 0;  // content hop failed, structural taken
    std::uint64_t fallback_content = 0;     // structural hop failed, content taken
    std::uint64_t dead_ends = 0;            // both hop types failed, walk cut short

    WalkStats& operator+=(const WalkStats& other);
};

struct ClassifyOptions {
    ClassifyMode mode = ClassifyMode::batch;
    std::optional<std::uint32_t> ttl;  // stamped onto assignments when set
    std::optional<Revision> now;       // assignment timestamp; graph revision if unset
    unsigned threads = 1;
};

// Walk the graph from v and tally visited labels. The master rng is never
// advanced: walk i draws from master.fork(v, i), so results are independent
// of processing order and thread count.
LabelDistribution walk_label_distribution(WalkContext& context, NodeId v, const WalkConfig& config,
                                          const Rng& master, WalkStats* stats = nullptr);

// Classify one unlabeled node against the current labeling. Does not apply
// the label to the graph.
Assignment classify_node(const DynamicGraph& graph, const Vocabulary& vocabulary, NodeId v,
                         const WalkConfig& config, const Rng& master,
                         const ClassifyOptions& options = {}, WalkStats* stats = nullptr);

// Classify the given nodes against the current labeling snapshot without
// applying anything; one assignment per input node, input order. Parallel
// across options.threads workers.
std::vector<Assignment> classify_nodes(const DynamicGraph& graph, const Vocabulary& vocabulary,
                                       std::span<const NodeId> nodes, const WalkConfig& config,
                                       const Rng& master, const ClassifyOptions& options = {},
                                       WalkStats* stats = nullptr);

// Classify every unlabeled node and apply the labels: after the full pass in
// batch mode, or one by one (ascending node id) in immediate mode.
std::vector<Assignment> classify_all(DynamicGraph& graph, const Vocabulary& vocabulary,
                                     const WalkConfig& config, const Rng& master,
                                     const ClassifyOptions& options = {},
                                     WalkStats* stats = nullptr);

// Strip walk-assigned labels whose ttl has lapsed (assigned_at + ttl <= now)
// and re-classify those nodes in one batch. `live` is updated in place:
// expired entries are replaced by the fresh assignments, which are also
// returned. Seed labels (nodes absent from `live`) are never touched.
std::vector<Assignment> reclassify_expired(DynamicGraph& graph, const Vocabulary& vocabulary,
                                           const WalkConfig& config,
                                           std::vector<Assignment>& live, const Rng& master,
                                           Revision now, const ClassifyOptions& options = {},
                                           WalkStats* stats = nullptr);

}  // namespace dycos
