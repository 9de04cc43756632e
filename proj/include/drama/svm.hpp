#pragma once

#include <stdexcept>
#include <vector>

namespace drama {

struct LinearModel {
    std::vector<double> weights;
    double bias = 0.0;
    double regularization_C = 1.0;

    double decision(const std::vector<double>& x) const;
};

struct SingleClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// L2-regularized hinge-loss linear SVM solved by dual coordinate descent
/// with fixed example order; converges to a 1e-6 projected-gradient
/// tolerance. Labels are +1/-1. The bias is trained as an augmented
/// constant feature. Deterministic for a fixed input order.
LinearModel train_svm(const std::vector<std::vector<double>>& rows,
                      const std::vector<int>& labels, double C);

}  // namespace drama
