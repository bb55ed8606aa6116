#include "dycos/vocabulary.hpp"

#include <algorithm>
#include <tuple>

#include "dycos/graph.hpp"

namespace dycos {

double compute_gini(const WordStats& stats) {
    if (stats.total == 0) throw ZeroTotalError();
    const double total = static_cast<double>(stats.total);
    double g = 0.0;
    for (std::uint64_t n : stats.per_label_counts) {
        const double p = static_cast<double>(n) / total;
        g += p * p;
    }
    return g;
}

void Vocabulary::erase_node(NodeId v, WordId wid) {
    auto it = index_.find(wid);
    if (it == index_.end()) return;
    std::vector<NodeId>& postings = entries_[it->second].postings;
    auto pos = std::lower_bound(postings.begin(), postings.end(), v);
    if (pos != postings.end() && *pos == v) postings.erase(pos);
}

void Vocabulary::clear_postings() {
    for (Entry& e : entries_) e.postings.clear();
}

void Vocabulary::append_posting(WordId wid, NodeId v) {
    auto it = index_.find(wid);
    if (it == index_.end()) return;
    entries_[it->second].postings.push_back(v);
}

void Vocabulary::set_entries(std::vector<Entry> entries, Revision built_at) {
    entries_ = std::move(entries);
    index_.clear();
    for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].wid, i);
    built_at_ = built_at;
}

bool Vocabulary::operator==(const Vocabulary& other) const {
    // Content comparison: word ids are dictionary-dependent and built_at is a
    // clock, so neither participates.
    if (entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Entry& a = entries_[i];
        const Entry& b = other.entries_[i];
        if (a.word != b.word || a.gini != b.gini || a.sample_count != b.sample_count ||
            a.postings != b.postings)
            return false;
    }
    return true;
}

std::vector<NodeId> sample_labeled_nodes(const DynamicGraph& graph, std::size_t sample_size,
                                         Rng& rng) {
    const std::vector<NodeId> labeled = graph.labeled_node_ids();
    if (labeled.empty()) throw NoLabeledNodesError();
    if (sample_size >= labeled.size()) return labeled;

    std::vector<NodeId> reservoir(labeled.begin(),
                                  labeled.begin() + static_cast<std::ptrdiff_t>(sample_size));
    for (std::size_t i = sample_size; i < labeled.size(); ++i) {
        const std::size_t j = rng.next_index(i + 1);
        if (j < sample_size) reservoir[j] = labeled[i];
    }
    std::sort(reservoir.begin(), reservoir.end());
    return reservoir;
}

Vocabulary build_vocabulary(const DynamicGraph& graph, const VocabularyConfig& config) {
    Rng rng(config.rng_seed);
    const std::vector<NodeId> sample = sample_labeled_nodes(graph, config.sample_size, rng);

    // Word-occurrence counts per label over the sampled texts.
    const std::size_t label_count = graph.label_count();
    std::unordered_map<WordId, std::vector<std::uint64_t>> counts;
    bool any_text = false;
    for (NodeId v : sample) {
        const Label lab = *graph.label_of(v);
        for (const auto& [wid, count] : graph.word_counts(v)) {
            any_text = true;
            auto [it, inserted] = counts.try_emplace(wid);
            if (inserted) it->second.assign(label_count, 0);
            it->second[lab] += count;
        }
    }
    if (!any_text) throw EmptyCorpusError();

    struct Scored {
        double gini;
        std::uint64_t total;
        WordId wid;
    };
    std::vector<Scored> scored;
    scored.reserve(counts.size());
    for (const auto& [wid, per_label] : counts) {
        WordStats stats;
        stats.per_label_counts = per_label;
        for (std::uint64_t n : per_label) stats.total += n;
        scored.push_back({compute_gini(stats), stats.total, wid});
    }
    std::sort(scored.begin(), scored.end(), [&](const Scored& a, const Scored& b) {
        if (a.gini != b.gini) return a.gini > b.gini;
        if (a.total != b.total) return a.total > b.total;
        return graph.word_name(a.wid) < graph.word_name(b.wid);
    });
    if (scored.size() > config.size) scored.resize(config.size);

    std::vector<Vocabulary::Entry> entries;
    entries.reserve(scored.size());
    for (const Scored& s : scored) {
        Vocabulary::Entry e;
        e.word = graph.word_name(s.wid);
        e.wid = s.wid;
        e.gini = s.gini;
        e.sample_count = s.total;
        entries.push_back(std::move(e));
    }

    Vocabulary vocab;
    vocab.set_entries(std::move(entries), graph.revision());
    rebuild_inverted_index(graph, vocab);
    return vocab;
}

void rebuild_inverted_index(const DynamicGraph& graph, Vocabulary& vocabulary) {
    vocabulary.clear_postings();
    for (NodeId v : graph.node_ids())
        for (const auto& [wid, count] : graph.word_counts(v)) {
            (void)count;
            vocabulary.append_posting(wid, v);
        }
}

}  // namespace dycos
