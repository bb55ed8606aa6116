#include "dycos/graph.hpp"

#include <algorithm>
#include <map>

namespace dycos {

namespace {

// Erase the first occurrence of value; returns whether anything was removed.
bool erase_value(std::vector<NodeId>& list, NodeId value) {
    auto it = std::find(list.begin(), list.end(), value);
    if (it == list.end()) return false;
    list.erase(it);
    return true;
}

bool contains(const std::vector<NodeId>& list, NodeId value) {
    return std::find(list.begin(), list.end(), value) != list.end();
}

}  // namespace

NodeId DynamicGraph::add_node(std::optional<Label> label) {
    if (label && *label >= label_names_.size())
        throw Error("add_node: label id " + std::to_string(*label) + " was never interned");
    const NodeId id = static_cast<NodeId>(nodes_.size());
    nodes_.emplace_back();
    NodeRecord& r = nodes_.back();
    r.alive = true;
    ++alive_count_;
    if (label) {
        r.label = static_cast<std::int64_t>(*label);
        ++label_hist_[*label];
        ++labeled_count_;
    }
    ++revision_;
    return id;
}

void DynamicGraph::remove_node(NodeId v) {
    NodeRecord& r = rec(v);
    // Detach from every neighbor's lists; each erased directed edge is
    // accounted once.
    for (NodeId u : r.und) {
        if (u == v) continue;
        NodeRecord& n = nodes_[u];
        if (erase_value(n.out, v)) --edge_count_;  // edge u -> v
        if (erase_value(n.in, v)) --edge_count_;   // edge v -> u
        erase_value(n.und, v);
    }
    if (contains(r.out, v)) --edge_count_;  // self-loop
    if (r.label >= 0) {
        --label_hist_[static_cast<Label>(r.label)];
        --labeled_count_;
    }
    for (const auto& [wid, count] : r.words) {
        (void)count;
        vocab_.erase_node(v, wid);
    }
    r = NodeRecord{};  // alive=false tombstone; id never reused
    --alive_count_;
    ++revision_;
}

std::vector<NodeId> DynamicGraph::node_ids() const {
    std::vector<NodeId> ids;
    ids.reserve(alive_count_);
    for (NodeId v = 0; v < nodes_.size(); ++v)
        if (nodes_[v].alive) ids.push_back(v);
    return ids;
}

std::vector<NodeId> DynamicGraph::labeled_node_ids() const {
    std::vector<NodeId> ids;
    ids.reserve(labeled_count_);
    for (NodeId v = 0; v < nodes_.size(); ++v)
        if (nodes_[v].alive && nodes_[v].label >= 0) ids.push_back(v);
    return ids;
}

std::vector<NodeId> DynamicGraph::unlabeled_node_ids() const {
    std::vector<NodeId> ids;
    ids.reserve(alive_count_ - labeled_count_);
    for (NodeId v = 0; v < nodes_.size(); ++v)
        if (nodes_[v].alive && nodes_[v].label < 0) ids.push_back(v);
    return ids;
}

void DynamicGraph::add_edge(NodeId from, NodeId to) {
    NodeRecord& f = rec(from);
    NodeRecord& t = rec(to);
    if (contains(f.out, to)) return;  // idempotent
    f.out.push_back(to);
    t.in.push_back(from);
    ++edge_count_;
    if (!contains(f.und, to)) f.und.push_back(to);
    if (from != to && !contains(t.und, from)) t.und.push_back(from);
    ++revision_;
}

void DynamicGraph::remove_edge(NodeId from, NodeId to) {
    NodeRecord& f = rec(from);
    NodeRecord& t = rec(to);
    if (!contains(f.out, to)) throw UnknownEdgeError(from, to);
    erase_value(f.out, to);
    erase_value(t.in, from);
    --edge_count_;
    // The undirected adjacency survives while the reverse edge exists.
    if (!has_edge(to, from)) {
        erase_value(f.und, to);
        if (from != to) erase_value(t.und, from);
    }
    ++revision_;
}

bool DynamicGraph::has_edge(NodeId from, NodeId to) const {
    if (!has_node(from) || !has_node(to)) return false;
    return contains(nodes_[from].out, to);
}

Label DynamicGraph::intern_label(const std::string& name) {
    auto it = label_ids_.find(name);
    if (it != label_ids_.end()) return it->second;
    const Label id = static_cast<Label>(label_names_.size());
    label_names_.push_back(name);
    label_ids_.emplace(name, id);
    label_hist_.push_back(0);
    return id;
}

std::optional<Label> DynamicGraph::find_label(const std::string& name) const {
    auto it = label_ids_.find(name);
    if (it == label_ids_.end()) return std::nullopt;
    return it->second;
}

void DynamicGraph::set_label(NodeId v, Label l) {
    NodeRecord& r = rec(v);
    if (l >= label_names_.size())
        throw Error("set_label: label id " + std::to_string(l) + " was never interned");
    if (r.label >= 0) {
        if (static_cast<Label>(r.label) == l) return;
        --label_hist_[static_cast<Label>(r.label)];
    } else {
        ++labeled_count_;
    }
    r.label = static_cast<std::int64_t>(l);
    ++label_hist_[l];
    ++revision_;
}

void DynamicGraph::clear_label(NodeId v) {
    NodeRecord& r = rec(v);
    if (r.label < 0) return;
    --label_hist_[static_cast<Label>(r.label)];
    --labeled_count_;
    r.label = -1;
    ++revision_;
}

std::vector<std::uint64_t> DynamicGraph::recount_histogram() const {
    std::vector<std::uint64_t> hist(label_names_.size(), 0);
    for (const NodeRecord& r : nodes_)
        if (r.alive && r.label >= 0) ++hist[static_cast<Label>(r.label)];
    return hist;
}

std::vector<Label> DynamicGraph::most_frequent_labels() const {
    if (labeled_count_ == 0) throw NoLabeledNodesError();
    std::uint64_t best = 0;
    for (std::uint64_t c : label_hist_) best = std::max(best, c);
    std::vector<Label> result;
    for (Label l = 0; l < label_hist_.size(); ++l)
        if (label_hist_[l] == best) result.push_back(l);
    return result;
}

WordId DynamicGraph::intern_word(const std::string& word) {
    auto it = word_ids_.find(word);
    if (it != word_ids_.end()) return it->second;
    const WordId id = static_cast<WordId>(word_names_.size());
    word_names_.push_back(word);
    word_ids_.emplace(word, id);
    return id;
}

std::optional<WordId> DynamicGraph::find_word(const std::string& word) const {
    auto it = word_ids_.find(word);
    if (it == word_ids_.end()) return std::nullopt;
    return it->second;
}

void DynamicGraph::attach_text(const TextPayload& payload) {
    attach_tokens(payload.node, payload.tokens);
}

void DynamicGraph::attach_tokens(NodeId v, std::span<const std::string> tokens) {
    if (tokens.empty()) throw Error("attach_text: empty token sequence");
    NodeRecord& r = rec(v);
    for (const std::string& token : tokens) {
        const WordId wid = intern_word(token);
        ++r.words[wid];
    }
    r.token_total += tokens.size();
    ++revision_;
}

bool DynamicGraph::operator==(const DynamicGraph& other) const {
    if (direction_ != other.direction_) return false;
    // The revision counter is a mutation clock, not content: two graphs that
    // reached the same state through different histories still compare equal.
    if (alive_count_ != other.alive_count_ || labeled_count_ != other.labeled_count_ ||
        edge_count_ != other.edge_count_)
        return false;
    if (nodes_.size() != other.nodes_.size()) return false;

    // Histogram compared by label name so interning order does not matter.
    std::map<std::string, std::uint64_t> hist_a, hist_b;
    for (Label l = 0; l < label_hist_.size(); ++l)
        if (label_hist_[l] > 0) hist_a[label_names_[l]] = label_hist_[l];
    for (Label l = 0; l < other.label_hist_.size(); ++l)
        if (other.label_hist_[l] > 0) hist_b[other.label_names_[l]] = other.label_hist_[l];
    if (hist_a != hist_b) return false;

    for (NodeId v = 0; v < nodes_.size(); ++v) {
        const NodeRecord& a = nodes_[v];
        const NodeRecord& b = other.nodes_[v];
        if (a.alive != b.alive) return false;
        if (!a.alive) continue;
        const bool a_labeled = a.label >= 0;
        const bool b_labeled = b.label >= 0;
        if (a_labeled != b_labeled) return false;
        if (a_labeled && label_names_[static_cast<Label>(a.label)] !=
                             other.label_names_[static_cast<Label>(b.label)])
            return false;
        if (a.token_total != b.token_total) return false;

        auto sorted = [](const std::vector<NodeId>& l) {
            std::vector<NodeId> s(l);
            std::sort(s.begin(), s.end());
            return s;
        };
        if (sorted(a.out) != sorted(b.out) || sorted(a.in) != sorted(b.in)) return false;

        std::map<std::string, std::uint32_t> words_a, words_b;
        for (const auto& [wid, count] : a.words) words_a[word_names_[wid]] = count;
        for (const auto& [wid, count] : b.words) words_b[other.word_names_[wid]] = count;
        if (words_a != words_b) return false;
    }
    return vocab_ == other.vocab_;
}

}  // namespace dycos
