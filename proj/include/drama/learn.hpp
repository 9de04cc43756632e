#pragma once

#include <string>
#include <vector>

#include "drama/features.hpp"
#include "drama/svm.hpp"

namespace drama {

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;  // the paper's per-class "mean accuracy"
    double f1 = 0.0;
};

struct ClassificationReport {
    // confusion counts: actual x predicted, Comedy first
    int comedy_as_comedy = 0;
    int comedy_as_tragedy = 0;
    int tragedy_as_comedy = 0;
    int tragedy_as_tragedy = 0;

    ClassMetrics comedy;
    ClassMetrics tragedy;
    double overall_accuracy = 0.0;
    double mean_class_recall = 0.0;

    std::vector<std::string> play_ids;
    std::vector<int> predicted;          // +1 Comedy, -1 Tragedy
    std::vector<double> decision_values;
    int degenerate_folds = 0;

    int total() const {
        return comedy_as_comedy + comedy_as_tragedy + tragedy_as_comedy + tragedy_as_tragedy;
    }
};

/// Decision ties (value exactly 0) predict Comedy.
int predict_label(const LinearModel& model, const std::vector<double>& x);

/// Leave-one-out evaluation; folds run in parallel, results are
/// thread-count independent.
ClassificationReport loo_evaluate(const Dataset& dataset, double C);

struct RfeStep {
    int step = 0;
    std::string eliminated;
    std::vector<std::string> remaining;  // feature set evaluated at this step
    double loo_accuracy = 0.0;  // overall accuracy of the set before the elimination
};

/// Recursive feature elimination: trains on the full dataset, removes the
/// lowest-|weight| feature (ties toward the lexicographically last name),
/// records LOO accuracy per step, down to one feature.
std::vector<RfeStep> rfe(const Dataset& dataset, double C);

/// Appends z-scored character count as an extra feature column.
Dataset augment_with_size(const Dataset& dataset);

}  // namespace drama
