#include "dycos/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "dycos/vocabulary.hpp"

namespace dycos {

FoldPlan make_folds(const DynamicGraph& graph, std::uint32_t k, Rng& rng) {
    std::vector<NodeId> labeled = graph.labeled_node_ids();
    if (k == 0 || labeled.size() < k)
        throw TooFewLabeledNodesError(labeled.size(), k);

    // Fisher-Yates shuffle, then deal round-robin for balanced sizes.
    for (std::size_t i = labeled.size(); i > 1; --i)
        std::swap(labeled[i - 1], labeled[rng.next_index(i)]);

    FoldPlan plan;
    plan.k = k;
    plan.rng_seed = rng.seed();
    plan.folds.assign(k, {});
    for (std::size_t i = 0; i < labeled.size(); ++i)
        plan.folds[i % k].push_back(labeled[i]);
    for (std::vector<NodeId>& fold : plan.folds) std::sort(fold.begin(), fold.end());
    return plan;
}

double misclassification_bound(const BoundParams& params) {
    if (params.label_count <= 1) return 0.0;
    const double raw = static_cast<double>(params.label_count - 1) *
                       std::exp(-static_cast<double>(params.walk_length) * params.b * params.b / 2.0);
    return std::clamp(raw, 0.0, 1.0);
}

EvaluationReport cross_validate(DynamicGraph& graph, const VocabularyConfig& vocabulary_config,
                                const WalkConfig& walk_config, const FoldPlan& plan,
                                const Rng& master, const ClassifyOptions& options) {
    using clock = std::chrono::steady_clock;
    const Revision revision_before = graph.revision();

    EvaluationReport report;
    report.folds.reserve(plan.folds.size());

    for (std::size_t fold_index = 0; fold_index < plan.folds.size(); ++fold_index) {
        const std::vector<NodeId>& fold = plan.folds[fold_index];
        const auto started = clock::now();

        std::vector<std::pair<NodeId, Label>> hidden;
        hidden.reserve(fold.size());
        for (NodeId v : fold) {
            auto label = graph.label_of(v);
            if (!label) throw Error("cross_validate: fold references unlabeled node " +
                                    std::to_string(v));
            hidden.emplace_back(v, *label);
        }

        std::size_t correct = 0;
        try {
            for (const auto& [v, label] : hidden) {
                (void)label;
                graph.clear_label(v);
            }

            VocabularyConfig fold_vocab_config = vocabulary_config;
            fold_vocab_config.rng_seed = master.fork(fold_index, 1000).seed();
            Vocabulary fold_vocabulary;
            try {
                fold_vocabulary = build_vocabulary(graph, fold_vocab_config);
            } catch (const EmptyCorpusError&) {
                // Corpus without texts: the fold runs structural-only, with
                // content hops falling back to structural ones.
            }

            const std::vector<Assignment> assignments = classify_nodes(
                graph, fold_vocabulary, fold, walk_config, master.fork(fold_index, 2000), options);
            for (std::size_t i = 0; i < assignments.size(); ++i)
                if (assignments[i].label == hidden[i].second) ++correct;
        } catch (...) {
            for (const auto& [v, label] : hidden) graph.set_label(v, label);
            graph.set_revision(revision_before);
            throw;
        }
        for (const auto& [v, label] : hidden) graph.set_label(v, label);

        FoldResult result;
        result.hidden = hidden.size();
        result.accuracy = hidden.empty()
                              ? 0.0
                              : static_cast<double>(correct) / static_cast<double>(hidden.size());
        result.wall_ms =
            std::chrono::duration<double, std::milli>(clock::now() - started).count();
        report.folds.push_back(result);
    }
    graph.set_revision(revision_before);

    double sum = 0.0;
    for (const FoldResult& f : report.folds) sum += f.accuracy;
    const double n = report.folds.empty() ? 1.0 : static_cast<double>(report.folds.size());
    report.mean_accuracy = sum / n;
    double variance = 0.0;
    for (const FoldResult& f : report.folds) {
        const double d = f.accuracy - report.mean_accuracy;
        variance += d * d;
    }
    report.stddev = std::sqrt(variance / n);
    return report;
}

}  // namespace dycos
