#pragma once
// Mutable, timestamp-ordered store for a partially labeled directed graph
// with per-node word multisets.
//
// Layout:
// - nodes_: records indexed by NodeId; ids are dense at insertion and never
//   reused, so removed slots stay as tombstones
// - adjacency: out-, in- and merged undirected lists per node, insertion
//   ordered with set semantics (parallel edges collapse)
// - label / word dictionaries: append-only string <-> id tables
// - label_hist_: incremental label frequency histogram over labeled nodes
// - vocab_: the installed word-node layer; node removal cascades into its
//   posting lists so walks never see dangling ids

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dycos/errors.hpp"
#include "dycos/types.hpp"
#include "dycos/vocabulary.hpp"

namespace dycos {

// A tokenized text attached to one node. Tokens must be non-empty and
// already normalized per the tokenizer contract.
struct TextPayload {
    NodeId node = 0;
    std::vector<std::string> tokens;
};

class DynamicGraph {
public:
    explicit DynamicGraph(Direction direction = Direction::undirected)
        : direction_(direction) {}

    // --- nodes ---
    NodeId add_node(std::optional<Label> label = std::nullopt);
    void remove_node(NodeId v);
    bool has_node(NodeId v) const {
        return v < nodes_.size() && nodes_[v].alive;
    }
    std::size_t node_count() const { return alive_count_; }
    std::size_t labeled_count() const { return labeled_count_; }
    // One past the largest id ever assigned (tombstones included).
    NodeId id_upper_bound() const { return static_cast<NodeId>(nodes_.size()); }
    std::vector<NodeId> node_ids() const;
    std::vector<NodeId> labeled_node_ids() const;
    std::vector<NodeId> unlabeled_node_ids() const;

    // --- edges ---
    void add_edge(NodeId from, NodeId to);
    void remove_edge(NodeId from, NodeId to);
    bool has_edge(NodeId from, NodeId to) const;
    std::size_t edge_count() const { return edge_count_; }

    // Traversal neighbors under the configured direction mode, insertion order.
    std::span<const NodeId> out_neighbors(NodeId v) const {
        const NodeRecord& r = rec(v);
        return direction_ == Direction::undirected ? std::span<const NodeId>(r.und)
                                                   : std::span<const NodeId>(r.out);
    }
    // Stored directed lists, independent of the traversal mode.
    std::span<const NodeId> out_edges(NodeId v) const { return rec(v).out; }
    std::span<const NodeId> in_edges(NodeId v) const { return rec(v).in; }

    Direction direction() const { return direction_; }
    void set_direction(Direction d) { direction_ = d; }

    // --- labels ---
    Label intern_label(const std::string& name);
    std::optional<Label> find_label(const std::string& name) const;
    const std::string& label_name(Label l) const { return label_names_.at(l); }
    std::size_t label_count() const { return label_names_.size(); }
    std::optional<Label> label_of(NodeId v) const {
        const NodeRecord& r = rec(v);
        if (r.label < 0) return std::nullopt;
        return static_cast<Label>(r.label);
    }
    void set_label(NodeId v, Label l);
    void clear_label(NodeId v);
    const std::vector<std::uint64_t>& label_histogram() const { return label_hist_; }
    // Full recount from the label map; oracle for the incremental histogram.
    std::vector<std::uint64_t> recount_histogram() const;
    // All labels attaining the maximum histogram count, ascending.
    std::vector<Label> most_frequent_labels() const;

    // --- text ---
    WordId intern_word(const std::string& word);
    std::optional<WordId> find_word(const std::string& word) const;
    const std::string& word_name(WordId w) const { return word_names_.at(w); }
    std::size_t distinct_word_count() const { return word_names_.size(); }
    void attach_text(const TextPayload& payload);
    void attach_tokens(NodeId v, std::span<const std::string> tokens);
    const std::unordered_map<WordId, std::uint32_t>& word_counts(NodeId v) const {
        return rec(v).words;
    }
    // Total tokens ever attached to v (survives vocabulary rebuilds).
    std::uint64_t total_tokens(NodeId v) const { return rec(v).token_total; }

    // --- installed vocabulary (the word-node layer walks run against) ---
    void install_vocabulary(Vocabulary vocab) {
        vocab_ = std::move(vocab);
        ++revision_;
    }
    const Vocabulary& vocabulary() const { return vocab_; }

    Revision revision() const { return revision_; }
    // Harness hook: lets a state-restoring caller (cross-validation) rewind
    // the mutation clock after undoing its edits.
    void set_revision(Revision r) { revision_ = r; }

    // Semantic equality: same alive ids, labels and word multisets compared
    // by dictionary string (robust to interning order), adjacency compared
    // as sets, histogram, and installed vocabulary. The revision counter is
    // a clock, not content, and does not participate.
    bool operator==(const DynamicGraph& other) const;
    bool operator!=(const DynamicGraph& other) const { return !(*this == other); }

private:
    struct NodeRecord {
        std::vector<NodeId> out;
        std::vector<NodeId> in;
        std::vector<NodeId> und;  // out ∪ in, insertion ordered
        std::unordered_map<WordId, std::uint32_t> words;
        std::uint64_t token_total = 0;
        std::int64_t label = -1;
        bool alive = false;
    };

    NodeRecord& rec(NodeId v) {
        if (!has_node(v)) throw UnknownNodeError(v);
        return nodes_[v];
    }
    const NodeRecord& rec(NodeId v) const {
        if (!has_node(v)) throw UnknownNodeError(v);
        return nodes_[v];
    }

    std::vector<NodeRecord> nodes_;
    std::size_t alive_count_ = 0;
    std::size_t labeled_count_ = 0;
    std::size_t edge_count_ = 0;
    Direction direction_;
    Revision revision_ = 0;

    std::vector<std::string> label_names_;
    std::unordered_map<std::string, Label> label_ids_;
    std::vector<std::uint64_t> label_hist_;

    std::vector<std::string> word_names_;
    std::unordered_map<std::string, WordId> word_ids_;

    Vocabulary vocab_;
};

}  // namespace dycos
