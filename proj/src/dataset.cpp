#include "dycos/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

#include "json.hpp"

#include "dycos/tokenizer.hpp"

namespace dycos {

using nlohmann::json;

NodeId IdMap::intern(const std::string& name, DynamicGraph& graph) {
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    const NodeId id = graph.add_node();
    names.push_back(name);
    ids.emplace(name, id);
    return id;
}

const NodeId* IdMap::find(const std::string& name) const {
    auto it = ids.find(name);
    return it == ids.end() ? nullptr : &it->second;
}

namespace {

// Reads logical lines: strips trailing \r, tracks 1-based line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}
    bool next(std::string& out) {
        if (!std::getline(in_, out)) return false;
        ++line_no_;
        if (!out.empty() && out.back() == '\r') out.pop_back();
        return true;
    }
    std::size_t line() const { return line_no_; }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open " + path);
    return f;
}

// Splits into exactly two fields at the first tab. Returns false when there
// is no tab at all.
bool split_two(const std::string& line, std::string& a, std::string& b) {
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) return false;
    a = line.substr(0, tab);
    b = line.substr(tab + 1);
    return true;
}

}  // namespace

LoadedDataset load_dataset(const DatasetPaths& paths, Direction direction, bool skip_bad_rows) {
    LoadedDataset result;
    result.graph.set_direction(direction);

    auto reject = [&](const std::string& file, std::size_t line, const std::string& reason) {
        if (!skip_bad_rows) throw ParseError(line, file + ": " + reason);
        result.rejected.push_back({file, line, reason});
    };

    if (!paths.edges.empty()) {
        std::ifstream f = open_or_throw(paths.edges);
        LineReader reader(f);
        std::string line, from, to;
        while (reader.next(line)) {
            if (line.empty()) continue;
            if (!split_two(line, from, to) || from.empty() || to.empty() ||
                to.find('\t') != std::string::npos) {
                reject(paths.edges, reader.line(), "expected from_id<TAB>to_id");
                continue;
            }
            const NodeId u = result.ids.intern(from, result.graph);
            const NodeId v = result.ids.intern(to, result.graph);
            result.graph.add_edge(u, v);
            ++result.edge_rows;
        }
    }

    if (!paths.labels.empty()) {
        std::ifstream f = open_or_throw(paths.labels);
        LineReader reader(f);
        std::string line, node, label;
        while (reader.next(line)) {
            if (line.empty()) continue;
            if (!split_two(line, node, label) || node.empty() || label.empty() ||
                label.find('\t') != std::string::npos) {
                reject(paths.labels, reader.line(), "expected node_id<TAB>label");
                continue;
            }
            const NodeId v = result.ids.intern(node, result.graph);
            result.graph.set_label(v, result.graph.intern_label(label));
            ++result.label_rows;
        }
    }

    if (!paths.texts.empty()) {
        std::ifstream f = open_or_throw(paths.texts);
        LineReader reader(f);
        std::string line, node, text;
        while (reader.next(line)) {
            if (line.empty()) continue;
            if (!split_two(line, node, text) || node.empty()) {
                reject(paths.texts, reader.line(), "expected node_id<TAB>text");
                continue;
            }
            const NodeId v = result.ids.intern(node, result.graph);
            const std::vector<std::string> tokens = tokenize(text);
            if (!tokens.empty()) result.graph.attach_tokens(v, tokens);
            ++result.text_rows;
        }
    }
    return result;
}

namespace {

std::string need_string(const json& j, const char* key, std::size_t line) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string())
        throw ParseError(line, std::string("missing string field \"") + key + "\"");
    return it->get<std::string>();
}

NodeId need_node(const json& j, const char* key, std::size_t line, const IdMap& ids) {
    const std::string name = need_string(j, key, line);
    const NodeId* id = ids.find(name);
    if (!id) throw UnknownNodeError(name);
    return *id;
}

}  // namespace

ReplayResult replay_events(std::istream& stream, Direction direction,
                           const ReplayCheckpoint& checkpoint) {
    ReplayResult result;
    result.graph.set_direction(direction);

    LineReader reader(stream);
    std::string line;
    while (reader.next(line)) {
        if (line.empty()) continue;
        const json event = json::parse(line, nullptr, false);
        if (event.is_discarded() || !event.is_object())
            throw ParseError(reader.line(), "invalid JSON event");

        auto t_it = event.find("t");
        if (t_it == event.end() || !t_it->is_number_integer() || t_it->get<std::int64_t>() < 0)
            throw ParseError(reader.line(), "missing nonnegative integer field \"t\"");
        const std::uint64_t t = t_it->get<std::uint64_t>();
        if (result.events > 0 && t < result.last_t)
            throw OutOfOrderEventError(reader.line(), static_cast<std::int64_t>(result.last_t),
                                       static_cast<std::int64_t>(t));
        if (result.events > 0 && t > result.last_t && checkpoint)
            checkpoint(result.last_t, result.graph, result.ids);
        result.last_t = t;

        const std::string op = need_string(event, "op", reader.line());
        if (op == "add_node") {
            const std::string name = need_string(event, "id", reader.line());
            if (result.ids.find(name))
                throw ParseError(reader.line(), "duplicate node id '" + name + "'");
            const NodeId v = result.ids.intern(name, result.graph);
            if (event.contains("label"))
                result.graph.set_label(v,
                                       result.graph.intern_label(need_string(event, "label",
                                                                             reader.line())));
        } else if (op == "add_edge") {
            result.graph.add_edge(need_node(event, "from", reader.line(), result.ids),
                                  need_node(event, "to", reader.line(), result.ids));
        } else if (op == "remove_node") {
            result.graph.remove_node(need_node(event, "id", reader.line(), result.ids));
        } else if (op == "remove_edge") {
            result.graph.remove_edge(need_node(event, "from", reader.line(), result.ids),
                                     need_node(event, "to", reader.line(), result.ids));
        } else if (op == "attach_text") {
            const NodeId v = need_node(event, "id", reader.line(), result.ids);
            const std::vector<std::string> tokens =
                tokenize(need_string(event, "text", reader.line()));
            if (!tokens.empty()) result.graph.attach_tokens(v, tokens);
        } else if (op == "set_label") {
            const NodeId v = need_node(event, "id", reader.line(), result.ids);
            result.graph.set_label(v, result.graph.intern_label(need_string(event, "label",
                                                                            reader.line())));
        } else {
            throw ParseError(reader.line(), "unknown op \"" + op + "\"");
        }
        ++result.events;
    }
    if (result.events > 0 && checkpoint) checkpoint(result.last_t, result.graph, result.ids);
    return result;
}

void serialize_events(const DynamicGraph& graph, const IdMap& ids, std::ostream& out,
                      std::uint64_t t) {
    auto name_of = [&](NodeId v) -> const std::string& { return ids.names.at(v); };

    for (NodeId v : graph.node_ids()) {
        json event{{"t", t}, {"op", "add_node"}, {"id", name_of(v)}};
        if (auto label = graph.label_of(v)) event["label"] = graph.label_name(*label);
        out << event.dump() << '\n';
    }
    for (NodeId v : graph.node_ids()) {
        if (graph.word_counts(v).empty()) continue;
        std::map<std::string, std::uint32_t> sorted_words;
        for (const auto& [wid, count] : graph.word_counts(v))
            sorted_words.emplace(graph.word_name(wid), count);
        std::string text;
        for (const auto& [word, count] : sorted_words)
            for (std::uint32_t i = 0; i < count; ++i) {
                if (!text.empty()) text += ' ';
                text += word;
            }
        out << json{{"t", t}, {"op", "attach_text"}, {"id", name_of(v)}, {"text", text}}.dump()
            << '\n';
    }
    for (NodeId v : graph.node_ids()) {
        std::vector<NodeId> targets(graph.out_edges(v).begin(), graph.out_edges(v).end());
        std::sort(targets.begin(), targets.end());
        for (NodeId u : targets)
            out << json{{"t", t}, {"op", "add_edge"}, {"from", name_of(v)}, {"to", name_of(u)}}
                       .dump()
                << '\n';
    }
}

void SyntheticSpec::validate() const {
    if (communities < 2) throw InvalidSpecError("synthetic spec: need at least 2 communities");
    if (nodes_per_community < 1)
        throw InvalidSpecError("synthetic spec: need at least 1 node per community");
    if (!(labeled_fraction > 0.0 && labeled_fraction < 1.0))
        throw InvalidSpecError("synthetic spec: labeled fraction must lie in (0,1)");
    if (!(intra_edge_prob > inter_edge_prob && inter_edge_prob > 0.0))
        throw InvalidSpecError("synthetic spec: need intra > inter > 0");
    if (intra_edge_prob > 1.0)
        throw InvalidSpecError("synthetic spec: intra edge probability above 1");
    if (words_per_community < 1)
        throw InvalidSpecError("synthetic spec: need at least 1 word per community");
    if (text_length < 1) throw InvalidSpecError("synthetic spec: need text length of at least 1");
    if (static_cast<std::uint64_t>(std::llround(labeled_fraction *
                                                static_cast<double>(nodes_per_community))) < 1)
        throw InvalidSpecError("synthetic spec: labeled fraction yields no labeled node");
}

namespace {

// Indices are drawn by geometric skip sampling so work is proportional to the
// number of hits, not the number of candidate pairs.
class SkipSampler {
public:
    SkipSampler(std::uint64_t universe, double p, Rng& rng)
        : universe_(universe), p_(p), rng_(rng) {}

    // Next selected index, or universe when exhausted.
    std::uint64_t next() {
        if (p_ >= 1.0) return position_ < universe_ ? position_++ : universe_;
        while (true) {
            const double u = rng_.next_double();
            const double skip = std::floor(std::log1p(-u) / std::log1p(-p_));
            position_ += 1 + static_cast<std::uint64_t>(skip);
            if (position_ > universe_) return universe_;
            return position_ - 1;
        }
    }

private:
    std::uint64_t universe_;
    double p_;
    Rng& rng_;
    std::uint64_t position_ = 0;
};

// Unrank pair index k over {(u,v) : 0 <= u < v < n}, ordered by (u, v).
std::pair<std::uint32_t, std::uint32_t> unrank_pair(std::uint64_t k, std::uint64_t n) {
    auto offset = [n](std::uint64_t u) { return u * n - u * (u + 1) / 2; };
    const double nd = static_cast<double>(n);
    double guess = nd - 0.5 - std::sqrt(std::max(0.0, (nd - 0.5) * (nd - 0.5) - 2.0 * static_cast<double>(k)));
    std::uint64_t u = static_cast<std::uint64_t>(std::max(0.0, guess));
    if (u >= n - 1) u = n - 2;
    while (u + 1 < n - 1 && offset(u + 1) <= k) ++u;
    while (u > 0 && offset(u) > k) --u;
    const std::uint64_t v = u + 1 + (k - offset(u));
    return {static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)};
}

}  // namespace

SyntheticDataset generate_synthetic(const SyntheticSpec& spec) {
    spec.validate();
    const Rng master(spec.seed);
    const std::uint32_t n = spec.nodes_per_community;
    const std::uint64_t total_nodes =
        static_cast<std::uint64_t>(spec.communities) * n;

    SyntheticDataset data;
    data.graph.set_direction(Direction::undirected);
    data.truth.reserve(total_nodes);

    // Interning community labels up front makes Label c equal community c.
    for (std::uint32_t c = 0; c < spec.communities; ++c)
        data.graph.intern_label("C" + std::to_string(c));

    const std::uint32_t labeled_per_community = static_cast<std::uint32_t>(
        std::llround(spec.labeled_fraction * static_cast<double>(n)));

    for (std::uint32_t c = 0; c < spec.communities; ++c) {
        // Pick which community members keep their label.
        std::vector<std::uint32_t> order(n);
        for (std::uint32_t j = 0; j < n; ++j) order[j] = j;
        Rng label_rng = master.fork(1, c);
        for (std::uint32_t j = n; j > 1; --j)
            std::swap(order[j - 1], order[label_rng.next_index(j)]);
        std::vector<bool> keeps(n, false);
        for (std::uint32_t j = 0; j < labeled_per_community; ++j) keeps[order[j]] = true;

        for (std::uint32_t j = 0; j < n; ++j) {
            const NodeId v = data.graph.add_node(
                keeps[j] ? std::optional<Label>(static_cast<Label>(c)) : std::nullopt);
            data.truth.push_back(static_cast<Label>(c));
            if (keeps[j]) data.labeled.push_back(v);
        }
    }

    // Edges, community-pair block by block.
    std::uint64_t block_index = 0;
    for (std::uint32_t ci = 0; ci < spec.communities; ++ci)
        for (std::uint32_t cj = ci; cj < spec.communities; ++cj, ++block_index) {
            Rng edge_rng = master.fork(2, block_index);
            const std::uint64_t base_i = static_cast<std::uint64_t>(ci) * n;
            const std::uint64_t base_j = static_cast<std::uint64_t>(cj) * n;
            if (ci == cj) {
                if (n < 2) continue;
                const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
                SkipSampler sampler(pairs, spec.intra_edge_prob, edge_rng);
                for (std::uint64_t k = sampler.next(); k < pairs; k = sampler.next()) {
                    const auto [u, v] = unrank_pair(k, n);
                    data.graph.add_edge(static_cast<NodeId>(base_i + u),
                                        static_cast<NodeId>(base_i + v));
                }
            } else {
                const std::uint64_t pairs = static_cast<std::uint64_t>(n) * n;
                SkipSampler sampler(pairs, spec.inter_edge_prob, edge_rng);
                for (std::uint64_t k = sampler.next(); k < pairs; k = sampler.next())
                    data.graph.add_edge(static_cast<NodeId>(base_i + k / n),
                                        static_cast<NodeId>(base_j + k % n));
            }
        }

    // Texts: every node draws tokens from its community's exclusive word set.
    std::vector<std::string> tokens(spec.text_length);
    for (NodeId v = 0; v < total_nodes; ++v) {
        const std::uint32_t c = static_cast<std::uint32_t>(data.truth[v]);
        Rng text_rng = master.fork(3, v);
        for (std::uint32_t i = 0; i < spec.text_length; ++i)
            tokens[i] = "c" + std::to_string(c) + "w" +
                        std::to_string(text_rng.next_index(spec.words_per_community));
        data.graph.attach_tokens(v, tokens);
    }
    return data;
}

void write_synthetic_files(const SyntheticDataset& data, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    auto open = [&](const char* name) {
        std::ofstream f(fs::path(out_dir) / name, std::ios::binary);
        if (!f) throw Error(std::string("cannot write ") + name + " under " + out_dir);
        return f;
    };
    auto node_name = [](NodeId v) { return "n" + std::to_string(v); };

    std::ofstream edges = open("edges.tsv");
    for (NodeId v : data.graph.node_ids()) {
        std::vector<NodeId> targets(data.graph.out_edges(v).begin(),
                                    data.graph.out_edges(v).end());
        std::sort(targets.begin(), targets.end());
        for (NodeId u : targets) edges << node_name(v) << '\t' << node_name(u) << '\n';
    }

    std::ofstream labels = open("labels.tsv");
    for (NodeId v : data.labeled)
        labels << node_name(v) << '\t' << data.graph.label_name(*data.graph.label_of(v)) << '\n';

    std::ofstream texts = open("texts.tsv");
    for (NodeId v : data.graph.node_ids()) {
        std::map<std::string, std::uint32_t> sorted_words;
        for (const auto& [wid, count] : data.graph.word_counts(v))
            sorted_words.emplace(data.graph.word_name(wid), count);
        if (sorted_words.empty()) continue;
        texts << node_name(v) << '\t';
        bool first = true;
        for (const auto& [word, count] : sorted_words)
            for (std::uint32_t i = 0; i < count; ++i) {
                if (!first) texts << ' ';
                texts << word;
                first = false;
            }
        texts << '\n';
    }

    std::ofstream truth = open("truth.tsv");
    for (NodeId v : data.graph.node_ids())
        truth << node_name(v) << '\t' << data.graph.label_name(data.truth[v]) << '\n';
}

}  // namespace dycos
