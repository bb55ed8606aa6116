#include "dycos/cli.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"

#include "dycos/classifier.hpp"
#include "dycos/dataset.hpp"
#include "dycos/evaluation.hpp"
#include "dycos/graph.hpp"
#include "dycos/rng.hpp"
#include "dycos/vocabulary.hpp"
#include "dycos/walk.hpp"

namespace dycos {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

// Flag errors detected after CLI11 parsing; mapped to exit code 1.
struct UsageError {
    std::string message;
};

std::string fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::string compact9(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

struct InputOpts {
    std::string edges, labels, texts, events;
    std::string direction = "undirected";
    bool skip_bad_rows = false;
};

void add_input_flags(CLI::App* sub, InputOpts& in, bool with_events = true) {
    sub->add_option("--edges", in.edges, "edges.tsv, rows `from_id<TAB>to_id`");
    sub->add_option("--labels", in.labels, "labels.tsv, rows `node_id<TAB>label`");
    sub->add_option("--texts", in.texts, "texts.tsv, rows `node_id<TAB>raw text`");
    if (with_events)
        sub->add_option("--events", in.events,
                        "JSON-lines event stream (alternative to the TSV inputs)");
    sub->add_option("--direction", in.direction, "edge traversal mode")
        ->check(CLI::IsMember({"out", "undirected"}))
        ->capture_default_str();
    sub->add_flag("--skip-bad-rows", in.skip_bad_rows,
                  "report malformed rows and continue instead of failing");
}

Direction parse_direction(const std::string& name) {
    return name == "out" ? Direction::out_only : Direction::undirected;
}

struct VocabOpts {
    std::size_t size = 10;
    std::size_t sample_size = std::numeric_limits<std::size_t>::max();
};

void add_vocab_flags(CLI::App* sub, VocabOpts& vo) {
    sub->add_option("--vocab-size", vo.size, "words kept in the vocabulary")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--vocab-sample-size", vo.sample_size,
                    "labeled nodes sampled for word statistics (default: all)")
        ->check(CLI::PositiveNumber);
}

struct WalkOpts {
    std::uint32_t walks = 10;
    std::uint32_t walk_length = 5;
    double p_structural = 0.5;
    std::uint32_t top_q = 10;
};

void add_walk_flags(CLI::App* sub, WalkOpts& wo) {
    sub->add_option("--ps", wo.p_structural, "probability of a structural hop per step")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    sub->add_option("--walks", wo.walks, "walks per node")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--walk-length", wo.walk_length, "hops per walk")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--top-q", wo.top_q, "candidate cap for content two-hops")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

WalkConfig to_walk_config(const WalkOpts& wo) {
    return {wo.walks, wo.walk_length, wo.p_structural, wo.top_q};
}

// Seed precedence: --seed flag, then DYCOS_SEED, then 0.
std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t flag_value) {
    if (seed_opt != nullptr && seed_opt->count() > 0) return flag_value;
    const char* env = std::getenv("DYCOS_SEED");
    if (env == nullptr) return 0;
    const std::string text(env);
    char* end = nullptr;
    errno = 0;
    const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
    if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE)
        throw UsageError{"DYCOS_SEED is not an unsigned integer: '" + text + "'"};
    return value;
}

struct Loaded {
    DynamicGraph graph;
    IdMap ids;
    std::vector<RejectedRow> rejected;
};

Loaded load_input(const InputOpts& in) {
    const bool has_tsv = !in.edges.empty() || !in.labels.empty() || !in.texts.empty();
    if (!in.events.empty() && has_tsv)
        throw UsageError{"--events cannot be combined with --edges/--labels/--texts"};
    if (in.events.empty() && !has_tsv)
        throw UsageError{"no input given: provide --edges/--labels/--texts or --events"};

    Loaded loaded;
    if (!in.events.empty()) {
        std::ifstream stream(in.events);
        if (!stream) throw Error("cannot open " + in.events);
        ReplayResult replayed = replay_events(stream, parse_direction(in.direction));
        loaded.graph = std::move(replayed.graph);
        loaded.ids = std::move(replayed.ids);
    } else {
        LoadedDataset dataset = load_dataset({in.edges, in.labels, in.texts},
                                             parse_direction(in.direction), in.skip_bad_rows);
        loaded.graph = std::move(dataset.graph);
        loaded.ids = std::move(dataset.ids);
        loaded.rejected = std::move(dataset.rejected);
    }
    return loaded;
}

Vocabulary build_vocab_or_empty(const DynamicGraph& graph, const VocabularyConfig& config,
                                double p_structural, std::ostream& err) {
    try {
        return build_vocabulary(graph, config);
    } catch (const EmptyCorpusError&) {
        if (p_structural < 1.0)
            err << "warning: no sampled labeled node has text; content hops will fall back to "
                   "structural hops\n";
        return {};
    }
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write " + path.string());
    return file;
}

void write_assignment_rows(std::ostream& out, const std::vector<Assignment>& assignments,
                           const DynamicGraph& graph, const IdMap& ids) {
    out << "node_id\tlabel\tconfidence\tsource\n";
    for (const Assignment& a : assignments)
        out << ids.names.at(a.node) << '\t' << graph.label_name(a.label) << '\t'
            << fixed6(a.confidence) << '\t' << to_string(a.source) << '\n';
}

ordered_json graph_summary(const DynamicGraph& graph) {
    return {{"nodes", graph.node_count()},
            {"edges", graph.edge_count()},
            {"labeled", graph.labeled_count()},
            {"labels", graph.label_count()}};
}

ordered_json vocab_summary(const VocabOpts& vo, const Vocabulary& vocab) {
    ordered_json words = ordered_json::array();
    for (const Vocabulary::Entry& e : vocab.entries())
        words.push_back({{"word", e.word}, {"gini", e.gini}, {"df", e.postings.size()}});
    ordered_json summary{{"size", vo.size}};
    if (vo.sample_size == std::numeric_limits<std::size_t>::max())
        summary["sample_size"] = "all";
    else
        summary["sample_size"] = vo.sample_size;
    summary["selected"] = std::move(words);
    return summary;
}

ordered_json walk_summary(const WalkOpts& wo) {
    return {{"walks", wo.walks},
            {"walk_length", wo.walk_length},
            {"p_structural", wo.p_structural},
            {"top_q", wo.top_q}};
}

ordered_json stats_summary(const WalkStats& stats) {
    return {{"structural_hops", stats.structural_hops},
            {"content_hops", stats.content_hops},
            {"fallback_structural", stats.fallback_structural},
            {"fallback_content", stats.fallback_content},
            {"dead_ends", stats.dead_ends}};
}

int cmd_load_check(const InputOpts& in, std::ostream& out) {
    const Loaded loaded = load_input(in);
    const DynamicGraph& graph = loaded.graph;
    out << "nodes\t" << graph.node_count() << "\n"
        << "edges\t" << graph.edge_count() << "\n"
        << "labeled\t" << graph.labeled_count() << "\n"
        << "labels\t" << graph.label_count() << "\n"
        << "distinct_words\t" << graph.distinct_word_count() << "\n"
        << "rejected_rows\t" << loaded.rejected.size() << "\n";
    for (const RejectedRow& row : loaded.rejected)
        out << "rejected\t" << row.file << ':' << row.line << '\t' << row.reason << "\n";
    return 0;
}

int cmd_vocab(const InputOpts& in, const VocabOpts& vo, std::uint64_t seed,
              const std::string& out_path, std::ostream& out) {
    const Loaded loaded = load_input(in);
    const Vocabulary vocab =
        build_vocabulary(loaded.graph, {vo.size, vo.sample_size, seed});

    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file = open_output(out_path);
        sink = &file;
    }
    *sink << "word\tgini\tdf\n";
    for (const Vocabulary::Entry& e : vocab.entries())
        *sink << e.word << '\t' << fixed6(e.gini) << '\t' << e.postings.size() << '\n';
    return 0;
}

int cmd_classify(const InputOpts& in, const VocabOpts& vo, const WalkOpts& wo,
                 const std::string& mode, std::uint32_t ttl, unsigned threads,
                 std::uint64_t seed, const std::string& out_dir, std::ostream& out,
                 std::ostream& err) {
    Loaded loaded = load_input(in);
    DynamicGraph& graph = loaded.graph;
    const std::size_t labeled_before = graph.labeled_count();

    const Rng master(seed);
    graph.install_vocabulary(build_vocab_or_empty(
        graph, {vo.size, vo.sample_size, master.fork(0, 1).seed()}, wo.p_structural, err));

    ClassifyOptions options;
    options.mode = mode == "immediate" ? ClassifyMode::immediate : ClassifyMode::batch;
    if (ttl > 0) options.ttl = ttl;
    options.threads = threads;

    WalkStats stats;
    const std::vector<Assignment> assignments = classify_all(
        graph, graph.vocabulary(), to_walk_config(wo), master.fork(0, 2), options, &stats);

    std::size_t fallback = 0;
    for (const Assignment& a : assignments)
        if (a.source == AssignmentSource::global_fallback) ++fallback;

    ordered_json report{{"schema", 1},
                        {"command", "classify"},
                        {"seed", seed},
                        {"direction", in.direction},
                        {"mode", mode}};
    if (ttl > 0) report["ttl"] = ttl;
    report["vocabulary"] = vocab_summary(vo, graph.vocabulary());
    report["walk"] = walk_summary(wo);
    report["graph"] = graph_summary(graph);
    report["graph"]["labeled_before"] = labeled_before;
    report["walk_stats"] = stats_summary(stats);
    ordered_json rows = ordered_json::array();
    for (const Assignment& a : assignments)
        rows.push_back({{"node", loaded.ids.names.at(a.node)},
                        {"label", graph.label_name(a.label)},
                        {"confidence", a.confidence},
                        {"source", to_string(a.source)}});
    report["assignments"] = std::move(rows);
    report["summary"] = {{"assigned", assignments.size()}, {"fallback", fallback}};

    if (out_dir.empty()) {
        write_assignment_rows(out, assignments, graph, loaded.ids);
    } else {
        fs::create_directories(out_dir);
        std::ofstream tsv = open_output(fs::path(out_dir) / "assignments.tsv");
        write_assignment_rows(tsv, assignments, graph, loaded.ids);
        std::ofstream json_file = open_output(fs::path(out_dir) / "report.json");
        json_file << report.dump(2) << '\n';
        out << "assigned\t" << assignments.size() << "\nfallback\t" << fallback << "\n";
    }
    return 0;
}

int cmd_evaluate(const InputOpts& in, const VocabOpts& vo, const WalkOpts& wo,
                 std::uint32_t folds, unsigned threads, std::uint64_t seed,
                 const std::string& out_dir, std::ostream& out) {
    Loaded loaded = load_input(in);

    const Rng master(seed);
    Rng fold_rng = master.fork(0, 3);
    const FoldPlan plan = make_folds(loaded.graph, folds, fold_rng);

    ClassifyOptions options;
    options.threads = threads;
    const EvaluationReport report =
        cross_validate(loaded.graph, {vo.size, vo.sample_size, 0}, to_walk_config(wo), plan,
                       master.fork(0, 4), options);

    ordered_json doc{{"schema", 1},
                     {"command", "evaluate"},
                     {"seed", seed},
                     {"direction", in.direction},
                     {"folds", folds}};
    doc["vocabulary"] = {{"size", vo.size},
                         {"sample_size",
                          vo.sample_size == std::numeric_limits<std::size_t>::max()
                              ? ordered_json("all")
                              : ordered_json(vo.sample_size)}};
    doc["walk"] = walk_summary(wo);
    doc["graph"] = graph_summary(loaded.graph);
    ordered_json fold_rows = ordered_json::array();
    for (std::size_t i = 0; i < report.folds.size(); ++i)
        fold_rows.push_back({{"fold", i},
                             {"hidden", report.folds[i].hidden},
                             {"accuracy", report.folds[i].accuracy}});
    doc["fold_results"] = std::move(fold_rows);
    doc["mean_accuracy"] = report.mean_accuracy;
    doc["stddev"] = report.stddev;

    if (out_dir.empty()) {
        out << doc.dump(2) << '\n';
    } else {
        fs::create_directories(out_dir);
        std::ofstream json_file = open_output(fs::path(out_dir) / "report.json");
        json_file << doc.dump(2) << '\n';
        std::ofstream csv = open_output(fs::path(out_dir) / "report.csv");
        csv << "fold,hidden,accuracy,wall_ms\n";
        for (std::size_t i = 0; i < report.folds.size(); ++i)
            csv << i << ',' << report.folds[i].hidden << ',' << fixed6(report.folds[i].accuracy)
                << ',' << fixed6(report.folds[i].wall_ms) << '\n';
        out << "mean_accuracy\t" << fixed6(report.mean_accuracy) << "\nstddev\t"
            << fixed6(report.stddev) << "\n";
    }
    return 0;
}

int cmd_bound(std::size_t label_count, const std::vector<double>& b_values,
              const std::vector<std::uint32_t>& lengths, std::ostream& out) {
    for (double b : b_values)
        if (!(b > 0.0 && b <= 1.0)) throw UsageError{"--b values must lie in (0, 1]"};
    out << "b\twalk_length\tlabel_count\tbound\n";
    for (double b : b_values)
        for (std::uint32_t l : lengths)
            out << compact9(b) << '\t' << l << '\t' << label_count << '\t'
                << compact9(misclassification_bound({b, l, label_count})) << '\n';
    return 0;
}

int cmd_synth(const SyntheticSpec& spec, const std::string& out_dir, std::ostream& out) {
    const SyntheticDataset data = generate_synthetic(spec);
    write_synthetic_files(data, out_dir);
    out << "nodes\t" << data.graph.node_count() << "\nedges\t" << data.graph.edge_count()
        << "\nlabeled\t" << data.graph.labeled_count() << "\ncommunities\t" << spec.communities
        << "\n";
    return 0;
}

int cmd_replay(const std::string& events_path, const std::string& direction,
               const std::vector<std::uint64_t>& classify_at, const VocabOpts& vo,
               const WalkOpts& wo, const std::string& mode, std::uint32_t ttl, unsigned threads,
               std::uint64_t seed, const std::string& out_dir, std::ostream& out,
               std::ostream& err) {
    std::ifstream stream(events_path);
    if (!stream) throw Error("cannot open " + events_path);
    if (!out_dir.empty()) fs::create_directories(out_dir);

    const Rng master(seed);
    const std::set<std::uint64_t> checkpoints(classify_at.begin(), classify_at.end());
    std::vector<Assignment> live;

    ReplayCheckpoint checkpoint;
    if (!checkpoints.empty())
        checkpoint = [&](std::uint64_t t, DynamicGraph& graph, const IdMap& ids) {
            if (checkpoints.find(t) == checkpoints.end()) return;
            if (graph.labeled_count() == 0) {
                err << "warning: checkpoint t=" << t
                    << " skipped: graph has no labeled nodes yet\n";
                return;
            }
            graph.install_vocabulary(build_vocab_or_empty(
                graph, {vo.size, vo.sample_size, master.fork(1, t).seed()}, wo.p_structural,
                err));

            ClassifyOptions options;
            options.mode = mode == "immediate" ? ClassifyMode::immediate : ClassifyMode::batch;
            if (ttl > 0) options.ttl = ttl;
            options.threads = threads;
            options.now = t;

            std::vector<Assignment> batch;
            if (ttl > 0)
                batch = reclassify_expired(graph, graph.vocabulary(), to_walk_config(wo), live,
                                           master.fork(2, t), t, options);
            std::vector<Assignment> fresh = classify_all(graph, graph.vocabulary(),
                                                         to_walk_config(wo), master.fork(3, t),
                                                         options);
            live.insert(live.end(), fresh.begin(), fresh.end());
            batch.insert(batch.end(), fresh.begin(), fresh.end());
            std::sort(batch.begin(), batch.end(),
                      [](const Assignment& a, const Assignment& b) { return a.node < b.node; });

            if (out_dir.empty()) {
                out << "# t=" << t << "\n";
                write_assignment_rows(out, batch, graph, ids);
            } else {
                std::ofstream tsv = open_output(fs::path(out_dir) /
                                                ("assignments_t" + std::to_string(t) + ".tsv"));
                write_assignment_rows(tsv, batch, graph, ids);
            }
        };

    const ReplayResult result = replay_events(stream, parse_direction(direction), checkpoint);
    out << "events\t" << result.events << "\nlast_t\t" << result.last_t << "\nnodes\t"
        << result.graph.node_count() << "\nedges\t" << result.graph.edge_count() << "\nlabeled\t"
        << result.graph.labeled_count() << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Random-walk node classification for partially labeled, text-attributed "
                 "dynamic graphs"};
    app.require_subcommand(1);

    int exit_code = 0;

    // --- load-check ---
    InputOpts lc_in;
    CLI::App* load_check =
        app.add_subcommand("load-check", "parse inputs and print graph statistics");
    add_input_flags(load_check, lc_in);
    load_check->callback([&] { exit_code = cmd_load_check(lc_in, out); });

    // --- vocab ---
    InputOpts vb_in;
    VocabOpts vb_vocab;
    std::uint64_t vb_seed = 0;
    std::string vb_out;
    CLI::App* vocab = app.add_subcommand("vocab", "build the vocabulary and dump word<TAB>gini<TAB>df");
    add_input_flags(vocab, vb_in);
    add_vocab_flags(vocab, vb_vocab);
    CLI::Option* vb_seed_opt = vocab->add_option("--seed", vb_seed, "rng seed (env DYCOS_SEED)");
    vocab->add_option("--out", vb_out, "write the dump to this file instead of stdout");
    vocab->callback([&] {
        exit_code = cmd_vocab(vb_in, vb_vocab, resolve_seed(vb_seed_opt, vb_seed), vb_out, out);
    });

    // --- classify ---
    InputOpts cl_in;
    VocabOpts cl_vocab;
    WalkOpts cl_walk;
    std::string cl_mode = "batch";
    std::uint32_t cl_ttl = 0;
    unsigned cl_threads = 1;
    std::uint64_t cl_seed = 0;
    std::string cl_out;
    CLI::App* classify = app.add_subcommand("classify", "label every unlabeled node");
    add_input_flags(classify, cl_in);
    add_vocab_flags(classify, cl_vocab);
    add_walk_flags(classify, cl_walk);
    classify->add_option("--mode", cl_mode, "label application mode")
        ->check(CLI::IsMember({"batch", "immediate"}))
        ->capture_default_str();
    classify->add_option("--ttl", cl_ttl, "lifetime for walk-assigned labels")
        ->check(CLI::PositiveNumber);
    classify->add_option("--threads", cl_threads, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    CLI::Option* cl_seed_opt =
        classify->add_option("--seed", cl_seed, "rng seed (env DYCOS_SEED)");
    classify->add_option("--out", cl_out, "directory for assignments.tsv and report.json");
    classify->callback([&] {
        exit_code = cmd_classify(cl_in, cl_vocab, cl_walk, cl_mode, cl_ttl, cl_threads,
                                 resolve_seed(cl_seed_opt, cl_seed), cl_out, out, err);
    });

    // --- evaluate ---
    InputOpts ev_in;
    VocabOpts ev_vocab;
    WalkOpts ev_walk;
    std::uint32_t ev_folds = 10;
    unsigned ev_threads = 1;
    std::uint64_t ev_seed = 0;
    std::string ev_out;
    CLI::App* evaluate = app.add_subcommand("evaluate", "k-fold cross-validation report");
    add_input_flags(evaluate, ev_in);
    add_vocab_flags(evaluate, ev_vocab);
    add_walk_flags(evaluate, ev_walk);
    evaluate->add_option("--folds", ev_folds, "number of folds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    evaluate->add_option("--threads", ev_threads, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    CLI::Option* ev_seed_opt =
        evaluate->add_option("--seed", ev_seed, "rng seed (env DYCOS_SEED)");
    evaluate->add_option("--out", ev_out, "directory for report.json and report.csv");
    evaluate->callback([&] {
        exit_code = cmd_evaluate(ev_in, ev_vocab, ev_walk, ev_folds, ev_threads,
                                 resolve_seed(ev_seed_opt, ev_seed), ev_out, out);
    });

    // --- bound ---
    std::size_t bd_labels = 5;
    std::vector<double> bd_b{0.1, 0.2, 0.3, 0.5};
    std::vector<std::uint32_t> bd_lengths{1, 10, 100, 1000};
    CLI::App* bound =
        app.add_subcommand("bound", "print the misclassification bound over a (b, l) grid");
    bound->add_option("--label-count", bd_labels, "number of labels |L|")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bound->add_option("--b", bd_b, "comma-separated thresholds in (0, 1]")->delimiter(',');
    bound->add_option("--lengths", bd_lengths, "comma-separated walk lengths")->delimiter(',');
    bound->callback([&] { exit_code = cmd_bound(bd_labels, bd_b, bd_lengths, out); });

    // --- synth ---
    SyntheticSpec sy_spec;
    std::string sy_out;
    CLI::App* synth =
        app.add_subcommand("synth", "generate a planted-community dataset with ground truth");
    synth->add_option("--communities", sy_spec.communities)->capture_default_str();
    synth->add_option("--nodes-per-community", sy_spec.nodes_per_community)
        ->capture_default_str();
    synth->add_option("--labeled-fraction", sy_spec.labeled_fraction)->capture_default_str();
    synth->add_option("--intra", sy_spec.intra_edge_prob, "within-community edge probability")
        ->capture_default_str();
    synth->add_option("--inter", sy_spec.inter_edge_prob, "cross-community edge probability")
        ->capture_default_str();
    synth->add_option("--words-per-community", sy_spec.words_per_community)
        ->capture_default_str();
    synth->add_option("--text-length", sy_spec.text_length, "tokens per node")
        ->capture_default_str();
    CLI::Option* sy_seed_opt = synth->add_option("--seed", sy_spec.seed, "rng seed");
    synth->add_option("--out", sy_out, "output directory")->required();
    synth->callback([&] {
        sy_spec.seed = resolve_seed(sy_seed_opt, sy_spec.seed);
        exit_code = cmd_synth(sy_spec, sy_out, out);
    });

    // --- replay ---
    std::string rp_events;
    std::string rp_direction = "undirected";
    std::vector<std::uint64_t> rp_at;
    VocabOpts rp_vocab;
    WalkOpts rp_walk;
    std::string rp_mode = "batch";
    std::uint32_t rp_ttl = 0;
    unsigned rp_threads = 1;
    std::uint64_t rp_seed = 0;
    std::string rp_out;
    CLI::App* replay =
        app.add_subcommand("replay", "apply an event stream, optionally classifying at checkpoints");
    replay->add_option("--events", rp_events, "JSON-lines event stream")->required();
    replay->add_option("--direction", rp_direction, "edge traversal mode")
        ->check(CLI::IsMember({"out", "undirected"}))
        ->capture_default_str();
    replay->add_option("--classify-at", rp_at, "timestamps to classify at (comma-separated)")
        ->delimiter(',');
    add_vocab_flags(replay, rp_vocab);
    add_walk_flags(replay, rp_walk);
    replay->add_option("--mode", rp_mode, "label application mode")
        ->check(CLI::IsMember({"batch", "immediate"}))
        ->capture_default_str();
    replay->add_option("--ttl", rp_ttl, "lifetime for walk-assigned labels; expiry is checked "
                                        "at each checkpoint")
        ->check(CLI::PositiveNumber);
    replay->add_option("--threads", rp_threads, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    CLI::Option* rp_seed_opt = replay->add_option("--seed", rp_seed, "rng seed (env DYCOS_SEED)");
    replay->add_option("--out", rp_out, "directory for per-checkpoint assignment files");
    replay->callback([&] {
        exit_code = cmd_replay(rp_events, rp_direction, rp_at, rp_vocab, rp_walk, rp_mode,
                               rp_ttl, rp_threads, resolve_seed(rp_seed_opt, rp_seed), rp_out,
                               out, err);
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("dycos");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        err << "error: " << e.message << "\n";
        return 1;
    } catch (const InvalidSpecError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace dycos
