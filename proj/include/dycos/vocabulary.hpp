#pragma once

#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "dycos/rng.hpp"
#include "dycos/types.hpp"

namespace dycos {

class DynamicGraph;

struct VocabularyConfig {
    // Target vocabulary size m (top-m words by Gini coefficient).
    std::size_t size = 10;
    // Reservoir sample size |S_t|; defaults to all labeled nodes.
    std::size_t sample_size = std::numeric_limits<std::size_t>::max();
    std::uint64_t rng_seed = 0;
};

// Per-word occurrence counts, one slot per label id.
struct WordStats {
    std::string word;
    std::vector<std::uint64_t> per_label_counts;
    std::uint64_t total = 0;
};

// G(w) = sum_i (n_i / total)^2 over the per-label counts.
// Always in [1/label_count, 1]; throws ZeroTotalError when total is zero.
double compute_gini(const WordStats& stats);

// The selected word layer: one entry per word node, each carrying its Gini
// score and the inverted list of structural nodes whose text contains it.
class Vocabulary {
public:
    struct Entry {
        std::string word;
        WordId wid = 0;
        double gini = 0.0;
        std::uint64_t sample_count = 0;  // occurrences across the sampled texts
        std::vector<NodeId> postings;    // ascending node ids, full node set
    };

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }
    Revision built_at() const { return built_at_; }

    const Entry* find(WordId wid) const {
        auto it = index_.find(wid);
        return it == index_.end() ? nullptr : &entries_[it->second];
    }

    // Per-word postings mutation; removal hooks used by the graph store.
    void erase_node(NodeId v, WordId wid);
    void clear_postings();
    void append_posting(WordId wid, NodeId v);

    void set_entries(std::vector<Entry> entries, Revision built_at);
    void set_built_at(Revision r) { built_at_ = r; }

    bool operator==(const Vocabulary& other) const;

private:
    std::vector<Entry> entries_;               // (gini desc, count desc, word asc)
    std::unordered_map<WordId, std::size_t> index_;
    Revision built_at_ = 0;
};

// Uniform sample without replacement of labeled nodes (reservoir, Algorithm R).
// Returns min(sample_size, labeled count) ids, ascending.
std::vector<NodeId> sample_labeled_nodes(const DynamicGraph& graph, std::size_t sample_size,
                                         Rng& rng);

// Select the top-m words by Gini over a sample of labeled nodes and build
// the inverted index against the full node set. Ties at the cut break by
// higher sample count, then lexicographic word order.
Vocabulary build_vocabulary(const DynamicGraph& graph, const VocabularyConfig& config);

// Recompute every posting list from the graph's current texts. Idempotent.
void rebuild_inverted_index(const DynamicGraph& graph, Vocabulary& vocabulary);

}  // namespace dycos
