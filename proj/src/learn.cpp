#include "drama/learn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace drama {
namespace {

ClassMetrics class_metrics(int tp, int fn, int fp) {
    ClassMetrics m;
    m.recall = tp + fn > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
    m.precision = tp + fp > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
    m.f1 = m.precision + m.recall > 0.0
               ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
               : 0.0;
    return m;
}

}  // namespace

int predict_label(const LinearModel& model, const std::vector<double>& x) {
    return model.decision(x) >= 0.0 ? +1 : -1;
}

ClassificationReport loo_evaluate(const Dataset& dataset, double C) {
    const std::size_t n = dataset.n_rows();
    int comedies = 0, tragedies = 0;
    for (int y : dataset.labels) (y > 0 ? comedies : tragedies) += 1;
    if (comedies < 2 || tragedies < 2) {
        throw std::invalid_argument("loo_evaluate: need at least 2 plays per class");
    }

    ClassificationReport report;
    report.play_ids = dataset.play_ids;
    report.predicted.assign(n, 0);
    report.decision_values.assign(n, 0.0);
    std::vector<int> degenerate(n, 0);

#pragma omp parallel for schedule(dynamic)
    for (std::size_t held = 0; held < n; ++held) {
        std::vector<std::vector<double>> train_rows;
        std::vector<int> train_labels;
        train_rows.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == held) continue;
            train_rows.push_back(dataset.matrix[i]);
            train_labels.push_back(dataset.labels[i]);
        }
        try {
            const auto model = train_svm(train_rows, train_labels, C);
            report.decision_values[held] = model.decision(dataset.matrix[held]);
            report.predicted[held] = predict_label(model, dataset.matrix[held]);
        } catch (const SingleClassError&) {
            // fold lost one whole class: predict its majority
            int sum = 0;
            for (int y : train_labels) sum += y;
            report.predicted[held] = sum >= 0 ? +1 : -1;
            degenerate[held] = 1;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        report.degenerate_folds += degenerate[i];
        const bool actual_comedy = dataset.labels[i] > 0;
        const bool predicted_comedy = report.predicted[i] > 0;
        if (actual_comedy && predicted_comedy) ++report.comedy_as_comedy;
        else if (actual_comedy) ++report.comedy_as_tragedy;
        else if (predicted_comedy) ++report.tragedy_as_comedy;
        else ++report.tragedy_as_tragedy;
    }

    report.comedy = class_metrics(report.comedy_as_comedy, report.comedy_as_tragedy,
                                  report.tragedy_as_comedy);
    report.tragedy = class_metrics(report.tragedy_as_tragedy, report.tragedy_as_comedy,
                                   report.comedy_as_tragedy);
    report.overall_accuracy =
        static_cast<double>(report.comedy_as_comedy + report.tragedy_as_tragedy) /
        static_cast<double>(n);
    report.mean_class_recall = (report.comedy.recall + report.tragedy.recall) / 2.0;
    return report;
}

std::vector<RfeStep> rfe(const Dataset& dataset, double C) {
    if (dataset.n_cols() < 2) throw std::invalid_argument("rfe: need at least 2 features");

    Dataset current = dataset;
    std::vector<RfeStep> trace;
    int step = 0;
    while (!current.feature_names.empty()) {
        const auto model = train_svm(current.matrix, current.labels, C);

        // lowest |weight|; ties toward the lexicographically last feature name
        std::size_t victim = 0;
        for (std::size_t k = 1; k < model.weights.size(); ++k) {
            const double wk = std::fabs(model.weights[k]);
            const double wv = std::fabs(model.weights[victim]);
            if (wk < wv ||
                (wk == wv && current.feature_names[k] > current.feature_names[victim])) {
                victim = k;
            }
        }

        RfeStep entry;
        entry.step = ++step;
        entry.eliminated = current.feature_names[victim];
        entry.loo_accuracy = loo_evaluate(current, C).overall_accuracy;
        entry.remaining = current.feature_names;  // the set the accuracy refers to
        trace.push_back(std::move(entry));

        current.feature_names.erase(current.feature_names.begin() +
                                    static_cast<long>(victim));
        for (auto& row : current.matrix) row.erase(row.begin() + static_cast<long>(victim));
    }
    return trace;
}

Dataset augment_with_size(const Dataset& dataset) {
    auto it = std::find(dataset.extra_names.begin(), dataset.extra_names.end(),
                        "n_characters");
    if (it == dataset.extra_names.end()) {
        throw std::invalid_argument("augment_with_size: extras lack n_characters");
    }
    const std::size_t col = static_cast<std::size_t>(it - dataset.extra_names.begin());
    const std::size_t n = dataset.n_rows();

    std::vector<double> sizes(n);
    for (std::size_t r = 0; r < n; ++r) sizes[r] = dataset.extras[r][col];

    double mean = 0.0;
    for (double s : sizes) mean += s;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double s : sizes) var += (s - mean) * (s - mean);
    var /= static_cast<double>(n - 1);

    Dataset out = dataset;
    out.feature_names.push_back("n_characters");
    if (var <= 0.0) {
        out.constant_columns.push_back("n_characters");
        for (auto& row : out.matrix) row.push_back(0.0);
    } else {
        const double sd = std::sqrt(var);
        for (std::size_t r = 0; r < n; ++r) out.matrix[r].push_back((sizes[r] - mean) / sd);
    }
    return out;
}

}  // namespace drama
