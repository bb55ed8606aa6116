#include "dycos/classifier.hpp"

#include <algorithm>
#include <thread>

namespace dycos {

namespace {

// Stream tag for the tie-break draw, outside the per-walk index range.
constexpr std::uint64_t kSelectionStream = 0xffff'ffff'ffff'ffffULL;

Label pick_uniform(const std::vector<Label>& labels, Rng& rng) {
    return labels[rng.next_index(labels.size())];
}

Assignment finalize(const DynamicGraph& graph, NodeId v, const LabelDistribution& dist,
                    const Rng& master, const ClassifyOptions& options) {
    Assignment a;
    a.node = v;
    a.assigned_at = options.now.value_or(graph.revision());
    a.ttl = options.ttl;

    Rng select = master.fork(v, kSelectionStream);
    if (dist.total_visits == 0) {
        a.source = AssignmentSource::global_fallback;
        a.label = pick_uniform(graph.most_frequent_labels(), select);
        a.confidence = 0.0;
        return a;
    }
    std::uint64_t best = 0;
    for (std::uint64_t c : dist.counts) best = std::max(best, c);
    std::vector<Label> majority;
    for (Label l = 0; l < dist.counts.size(); ++l)
        if (dist.counts[l] == best) majority.push_back(l);
    a.source = AssignmentSource::walk_majority;
    a.label = pick_uniform(majority, select);
    a.confidence = static_cast<double>(best) / static_cast<double>(dist.total_visits);
    return a;
}

void require_classifiable(const DynamicGraph& graph, NodeId v) {
    if (!graph.has_node(v)) throw UnknownNodeError(v);
    if (graph.label_of(v)) throw AlreadyLabeledError(v);
    if (graph.labeled_count() == 0) throw NoLabeledNodesError();
}

}  // namespace

const char* to_string(AssignmentSource source) {
    return source == AssignmentSource::walk_majority ? "walk_majority" : "global_fallback";
}

WalkStats& WalkStats::operator+=(const WalkStats& other) {
    structural_hops += other.structural_hops;
    content_hops += other.content_hops;
    fallback_structural += other.fallback_structural;
    fallback_content += other.fallback_content;
    dead_ends += other.dead_ends;
    return *this;
}

LabelDistribution walk_label_distribution(WalkContext& context, NodeId v, const WalkConfig& config,
                                          const Rng& master, WalkStats* stats) {
    const DynamicGraph& graph = context.graph();
    LabelDistribution dist;
    dist.counts.assign(graph.label_count(), 0);
    WalkStats local;

    for (std::uint32_t walk = 0; walk < config.walks; ++walk) {
        Rng rng = master.fork(v, walk);
        NodeId current = v;
        for (std::uint32_t hop = 0; hop < config.walk_length; ++hop) {
            const bool want_structural = rng.next_double() < config.p_structural;
            std::optional<NodeId> next;
            if (want_structural) {
                next = context.structural(current, rng);
                if (next) {
                    ++local.structural_hops;
                } else if (config.p_structural < 1.0) {
                    next = context.content(current, rng);
                    if (next) ++local.fallback_content;
                }
            } else {
                next = context.content(current, rng);
                if (next) {
                    ++local.content_hops;
                } else {
                    next = context.structural(current, rng);
                    if (next) ++local.fallback_structural;
                }
            }
            if (!next) {
                ++local.dead_ends;
                break;
            }
            current = *next;
            if (auto label = graph.label_of(current)) {
                ++dist.counts[*label];
                ++dist.total_visits;
            }
        }
    }
    if (stats) *stats += local;
    return dist;
}

Assignment classify_node(const DynamicGraph& graph, const Vocabulary& vocabulary, NodeId v,
                         const WalkConfig& config, const Rng& master,
                         const ClassifyOptions& options, WalkStats* stats) {
    require_classifiable(graph, v);
    WalkContext context(graph, vocabulary, config.top_q);
    const LabelDistribution dist = walk_label_distribution(context, v, config, master, stats);
    return finalize(graph, v, dist, master, options);
}

std::vector<Assignment> classify_nodes(const DynamicGraph& graph, const Vocabulary& vocabulary,
                                       std::span<const NodeId> nodes, const WalkConfig& config,
                                       const Rng& master, const ClassifyOptions& options,
                                       WalkStats* stats) {
    for (NodeId v : nodes) require_classifiable(graph, v);
    std::vector<Assignment> result(nodes.size());
    if (nodes.empty()) return result;

    const unsigned workers =
        std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(nodes.size())));
    std::vector<WalkStats> worker_stats(workers);

    auto run_range = [&](std::size_t begin, std::size_t end, WalkStats* local_stats) {
        WalkContext context(graph, vocabulary, config.top_q);
        for (std::size_t i = begin; i < end; ++i) {
            const NodeId v = nodes[i];
            const LabelDistribution dist =
                walk_label_distribution(context, v, config, master, local_stats);
            result[i] = finalize(graph, v, dist, master, options);
        }
    };

    if (workers == 1) {
        run_range(0, nodes.size(), &worker_stats[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        const std::size_t chunk = (nodes.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(nodes.size(), begin + chunk);
            if (begin >= end) break;
            threads.emplace_back(run_range, begin, end, &worker_stats[w]);
        }
        for (std::thread& t : threads) t.join();
    }
    if (stats)
        for (const WalkStats& ws : worker_stats) *stats += ws;
    return result;
}

std::vector<Assignment> classify_all(DynamicGraph& graph, const Vocabulary& vocabulary,
                                     const WalkConfig& config, const Rng& master,
                                     const ClassifyOptions& options, WalkStats* stats) {
    if (graph.labeled_count() == 0) throw NoLabeledNodesError();
    const std::vector<NodeId> targets = graph.unlabeled_node_ids();

    if (options.mode == ClassifyMode::immediate) {
        std::vector<Assignment> result;
        result.reserve(targets.size());
        WalkContext context(graph, vocabulary, config.top_q);
        for (NodeId v : targets) {
            const LabelDistribution dist =
                walk_label_distribution(context, v, config, master, stats);
            Assignment a = finalize(graph, v, dist, master, options);
            graph.set_label(a.node, a.label);
            result.push_back(a);
        }
        return result;
    }

    std::vector<Assignment> result =
        classify_nodes(graph, vocabulary, targets, config, master, options, stats);
    for (const Assignment& a : result) graph.set_label(a.node, a.label);
    return result;
}

std::vector<Assignment> reclassify_expired(DynamicGraph& graph, const Vocabulary& vocabulary,
                                           const WalkConfig& config,
                                           std::vector<Assignment>& live, const Rng& master,
                                           Revision now, const ClassifyOptions& options,
                                           WalkStats* stats) {
    std::vector<NodeId> expired;
    for (const Assignment& a : live)
        if (a.ttl && a.assigned_at + *a.ttl <= now && graph.has_node(a.node))
            expired.push_back(a.node);
    if (expired.empty()) return {};
    std::sort(expired.begin(), expired.end());

    for (NodeId v : expired) graph.clear_label(v);

    ClassifyOptions opts = options;
    if (!opts.now) opts.now = now;
    std::vector<Assignment> fresh =
        classify_nodes(graph, vocabulary, expired, config, master, opts, stats);
    for (const Assignment& a : fresh) graph.set_label(a.node, a.label);

    // Swap the expired entries for their replacements in place.
    std::erase_if(live, [&](const Assignment& a) {
        return std::binary_search(expired.begin(), expired.end(), a.node);
    });
    live.insert(live.end(), fresh.begin(), fresh.end());
    return fresh;
}

}  // namespace dycos
