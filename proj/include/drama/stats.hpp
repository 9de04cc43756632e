#pragma once

#include <optional>
#include <string>
#include <vector>

namespace drama {

struct CorrelationMatrix {
    std::vector<std::string> feature_names;
    // NaN marks a coefficient against a zero-variance column
    std::vector<std::vector<double>> values;
};

struct WilcoxonResult {
    double statistic_U = 0.0;  // U of the first group, midrank ties
    double p_value = 1.0;      // two-sided
    int n1 = 0;
    int n2 = 0;
    bool exact = false;
};

struct PcaResult {
    std::vector<std::vector<double>> loadings;  // features x components
    std::vector<double> explained_variance;     // descending
    std::vector<std::vector<double>> scores;    // rows x components
};

double pearson(const std::vector<double>& a, const std::vector<double>& b);

/// Pairwise Pearson coefficients over named columns. Zero-variance columns
/// produce NaN coefficients (diagonal stays 1).
CorrelationMatrix pearson_matrix(const std::vector<std::string>& names,
                                 const std::vector<std::vector<double>>& columns);

/// Greedy screen: walks keep_priority, excluding any feature whose absolute
/// correlation with an already-kept feature exceeds the threshold. A feature
/// correlated above the threshold with `size_feature` (when present in the
/// matrix) is excluded up front. Returns the excluded feature names.
std::vector<std::string> correlation_screen(const CorrelationMatrix& m, double threshold,
                                            const std::vector<std::string>& keep_priority,
                                            const std::string& size_feature = "n_characters");

/// Two-sided Mann-Whitney U test. Exact enumeration when n1+n2 <= 20 and no
/// ties; otherwise normal approximation with tie and continuity correction.
WilcoxonResult wilcoxon_ranksum(const std::vector<double>& group_a,
                                const std::vector<double>& group_b,
                                bool force_approx = false);

/// PCA by cyclic Jacobi eigendecomposition of the covariance matrix.
/// Loading columns flipped so their largest-magnitude entry is positive;
/// scores are the centered data projected on the loadings.
PcaResult pca(const std::vector<std::vector<double>>& rows);

struct FiveNumber {
    double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0;
};
FiveNumber five_number_summary(std::vector<double> values);
double mean_of(const std::vector<double>& values);
double median_of(std::vector<double> values);

}  // namespace drama
