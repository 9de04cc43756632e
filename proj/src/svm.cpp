#include "drama/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace drama {

double LinearModel::decision(const std::vector<double>& x) const {
    double sum = bias;
    for (std::size_t i = 0; i < weights.size(); ++i) sum += weights[i] * x[i];
    return sum;
}

// Dual coordinate descent for L1-loss SVM (Hsieh et al. style), bias handled
// as an augmented feature of value 1.
LinearModel train_svm(const std::vector<std::vector<double>>& rows,
                      const std::vector<int>& labels, double C) {
    const std::size_t n = rows.size();
    if (n == 0 || labels.size() != n) throw std::invalid_argument("train_svm: bad input");
    const std::size_t d = rows.front().size();

    bool has_pos = false, has_neg = false;
    for (int y : labels) (y > 0 ? has_pos : has_neg) = true;
    if (!has_pos || !has_neg) throw SingleClassError("train_svm: single-class input");

    for (const auto& row : rows) {
        if (row.size() != d) throw std::invalid_argument("train_svm: ragged input");
        for (double x : row) {
            if (!std::isfinite(x)) throw std::invalid_argument("train_svm: non-finite input");
        }
    }

    std::vector<double> w(d + 1, 0.0);  // last entry is the bias
    std::vector<double> alpha(n, 0.0);
    std::vector<double> qdiag(n);
    for (std::size_t i = 0; i < n; ++i) {
        double q = 1.0;  // augmented bias feature
        for (double x : rows[i]) q += x * x;
        qdiag[i] = q;
    }

    constexpr double kTol = 1e-6;
    constexpr int kMaxPasses = 20000;
    for (int pass = 0; pass < kMaxPasses; ++pass) {
        double max_violation = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double y = static_cast<double>(labels[i]);
            double wx = w[d];
            for (std::size_t k = 0; k < d; ++k) wx += w[k] * rows[i][k];
            const double grad = y * wx - 1.0;

            double projected = grad;
            if (alpha[i] <= 0.0) projected = std::min(grad, 0.0);
            else if (alpha[i] >= C) projected = std::max(grad, 0.0);
            max_violation = std::max(max_violation, std::fabs(projected));
            if (projected == 0.0) continue;

            const double old_alpha = alpha[i];
            alpha[i] = std::clamp(old_alpha - grad / qdiag[i], 0.0, C);
            const double delta = (alpha[i] - old_alpha) * y;
            if (delta != 0.0) {
                for (std::size_t k = 0; k < d; ++k) w[k] += delta * rows[i][k];
                w[d] += delta;
            }
        }
        if (max_violation < kTol) break;
    }

    LinearModel model;
    model.weights.assign(w.begin(), w.begin() + static_cast<long>(d));
    model.bias = w[d];
    model.regularization_C = C;
    return model;
}

}  // namespace drama
