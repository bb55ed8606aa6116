#pragma once
// k-fold cross-validation over the labeled nodes plus the analytic
// misclassification bound (label_count - 1) * exp(-walk_length * b^2 / 2).

#include <cstdint>
#include <vector>

#include "dycos/classifier.hpp"
#include "dycos/graph.hpp"
#include "dycos/rng.hpp"
#include "dycos/walk.hpp"

namespace dycos {

// Balanced random partition of the labeled nodes into k disjoint folds.
struct FoldPlan {
    std::uint32_t k = 10;
    std::vector<std::vector<NodeId>> folds;  // each ascending; sizes differ by <= 1
    std::uint64_t rng_seed = 0;
};

struct BoundParams {
    double b = 0.1;                  // relative-frequency threshold in (0, 1]
    std::uint32_t walk_length = 1;   // hops per walk
    std::size_t label_count = 2;
};

struct BoundRow {
    double b = 0.0;
    std::uint32_t walk_length = 0;
    std::size_t label_count = 0;
    double bound = 0.0;
};

struct FoldResult {
    double accuracy = 0.0;
    std::size_t hidden = 0;  // nodes whose labels this fold hid
    double wall_ms = 0.0;    // measurement only; excluded from canonical reports
};

struct EvaluationReport {
    std::vector<FoldResult> folds;
    double mean_accuracy = 0.0;
    double stddev = 0.0;  // population standard deviation over folds
    std::vector<BoundRow> bound_table;
};

FoldPlan make_folds(const DynamicGraph& graph, std::uint32_t k, Rng& rng);

// (label_count - 1) * exp(-walk_length * b^2 / 2), clamped to [0, 1].
double misclassification_bound(const BoundParams& params);

// For each fold: hide its labels, rebuild the vocabulary on the remaining
// labeled nodes (so hidden labels never leak into word statistics), classify
// the hidden nodes against that fold vocabulary, and score the fraction that
// match their hidden labels. The graph is restored after every fold and the
// revision counter rewound at the end.
EvaluationReport cross_validate(DynamicGraph& graph, const VocabularyConfig& vocabulary_config,
                                const WalkConfig& walk_config, const FoldPlan& plan,
                                const Rng& master, const ClassifyOptions& options = {});

}  // namespace dycos
