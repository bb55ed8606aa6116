#pragma once
// Dataset I/O: TSV loaders, the JSON-lines event stream (replay + serialize),
// and the seeded planted-community generator used by tests and demos.

#include <functional>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "dycos/graph.hpp"
#include "dycos/rng.hpp"

namespace dycos {

struct DatasetPaths {
    std::string edges;   // from_id \t to_id
    std::string labels;  // node_id \t label
    std::string texts;   // node_id \t raw text (first tab splits)
};

struct RejectedRow {
    std::string file;
    std::size_t line = 0;
    std::string reason;
};

// Maps between the files' string ids and dense internal node ids.
struct IdMap {
    std::vector<std::string> names;  // NodeId -> external id
    std::unordered_map<std::string, NodeId> ids;

    NodeId intern(const std::string& name, DynamicGraph& graph);
    const NodeId* find(const std::string& name) const;
};

struct LoadedDataset {
    DynamicGraph graph;
    IdMap ids;
    std::vector<RejectedRow> rejected;
    std::size_t edge_rows = 0;
    std::size_t label_rows = 0;
    std::size_t text_rows = 0;
};

// Load a static dataset. Nodes are created on first mention in any file; an
// empty path skips that file. Malformed rows raise ParseError unless
// skip_bad_rows is set, in which case they are recorded and skipped. Text
// rows whose tokenization is empty attach nothing (not an error).
LoadedDataset load_dataset(const DatasetPaths& paths, Direction direction,
                           bool skip_bad_rows = false);

struct ReplayResult {
    DynamicGraph graph;
    IdMap ids;
    std::uint64_t last_t = 0;
    std::size_t events = 0;
};

// Invoked after the last event of a timestamp has been applied.
using ReplayCheckpoint =
    std::function<void(std::uint64_t t, DynamicGraph& graph, const IdMap& ids)>;

// Apply a JSON-lines event stream, one object per line:
//   {"t":1,"op":"add_node","id":"v1","label":"A"}   (label optional)
//   {"t":1,"op":"add_edge","from":"v2","to":"v1"}
//   {"t":2,"op":"remove_node","id":"v1"}
//   {"t":2,"op":"remove_edge","from":"v2","to":"v1"}
//   {"t":3,"op":"attach_text","id":"v1","text":"raw text"}
//   {"t":3,"op":"set_label","id":"v1","label":"B"}
// Timestamps must be non-decreasing; ops referencing ids never added fail
// with UnknownNode, and a re-added id fails with ParseError.
ReplayResult replay_events(std::istream& stream, Direction direction,
                           const ReplayCheckpoint& checkpoint = {});

// Canonical event-stream form of a graph's current state (single timestamp):
// add_node per alive node ascending (with label), attach_text with the word
// multiset spelled out sorted by word, then add_edge per stored directed
// edge, source ascending. Replaying the output reproduces the graph.
void serialize_events(const DynamicGraph& graph, const IdMap& ids, std::ostream& out,
                      std::uint64_t t = 0);

struct SyntheticSpec {
    std::uint32_t communities = 2;
    std::uint32_t nodes_per_community = 100;
    double labeled_fraction = 0.2;
    double intra_edge_prob = 0.1;
    double inter_edge_prob = 0.01;
    std::uint32_t words_per_community = 5;
    std::uint32_t text_length = 8;  // tokens per node
    std::uint64_t seed = 0;

    void validate() const;  // throws InvalidSpecError
};

struct SyntheticDataset {
    DynamicGraph graph;
    std::vector<Label> truth;    // ground-truth community per node id
    std::vector<NodeId> labeled; // nodes that kept their label, ascending
};

// Planted-partition graph: communities of equal size, dense inside and sparse
// across, each with its own exclusive word set. Labels "C0".."Ck-1" are
// interned in community order; a labeled_fraction share of each community
// keeps its label, the rest hold the truth vector only. Deterministic per
// seed.
SyntheticDataset generate_synthetic(const SyntheticSpec& spec);

// Write edges.tsv / labels.tsv / texts.tsv / truth.tsv under out_dir with
// external ids "n0".."nN-1". Byte-identical for identical spec.
void write_synthetic_files(const SyntheticDataset& data, const std::string& out_dir);

}  // namespace dycos
