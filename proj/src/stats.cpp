#include "drama/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace drama {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double column_mean(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

/// Midranks of the combined sample, in input order (a then b).
std::vector<double> midranks(const std::vector<double>& combined) {
    const std::size_t n = combined.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return combined[x] < combined[y]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && combined[order[j + 1]] == combined[order[i]]) ++j;
        const double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

/// Counts of k-subsets of ranks {1..N} by rank sum.
std::vector<std::vector<double>> rank_sum_counts(int N, int k) {
    const int max_sum = N * (N + 1) / 2;
    std::vector<std::vector<double>> dp(k + 1, std::vector<double>(max_sum + 1, 0.0));
    dp[0][0] = 1.0;
    for (int rank = 1; rank <= N; ++rank) {
        for (int chosen = std::min(rank, k); chosen >= 1; --chosen) {
            for (int s = max_sum; s >= rank; --s) {
                dp[chosen][s] += dp[chosen - 1][s - rank];
            }
        }
    }
    return dp;
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2) {
        throw std::invalid_argument("pearson: mismatched or too-short columns");
    }
    const double ma = column_mean(a);
    const double mb = column_mean(b);
    double num = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += (a[i] - ma) * (b[i] - mb);
        va += (a[i] - ma) * (a[i] - ma);
        vb += (b[i] - mb) * (b[i] - mb);
    }
    if (va <= 0.0 || vb <= 0.0) return kNaN;
    return num / std::sqrt(va * vb);
}

CorrelationMatrix pearson_matrix(const std::vector<std::string>& names,
                                 const std::vector<std::vector<double>>& columns) {
    if (names.size() != columns.size()) {
        throw std::invalid_argument("pearson_matrix: names/columns mismatch");
    }
    const std::size_t d = names.size();
    CorrelationMatrix m;
    m.feature_names = names;
    m.values.assign(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i) m.values[i][i] = 1.0;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            const double r = pearson(columns[i], columns[j]);
            m.values[i][j] = r;
            m.values[j][i] = r;
        }
    }
    return m;
}

std::vector<std::string> correlation_screen(const CorrelationMatrix& m, double threshold,
                                            const std::vector<std::string>& keep_priority,
                                            const std::string& size_feature) {
    auto index_of = [&](const std::string& name) -> int {
        for (std::size_t i = 0; i < m.feature_names.size(); ++i) {
            if (m.feature_names[i] == name) return static_cast<int>(i);
        }
        return -1;
    };
    auto exceeds = [&](int i, int j) {
        const double r = m.values[i][j];
        return std::isfinite(r) && std::fabs(r) > threshold;
    };

    std::vector<std::string> excluded;
    const int size_idx = index_of(size_feature);

    // size-correlation rule first
    for (const auto& name : keep_priority) {
        const int i = index_of(name);
        if (i < 0 || i == size_idx) continue;
        if (size_idx >= 0 && exceeds(i, size_idx)) excluded.push_back(name);
    }

    std::vector<int> kept;
    for (const auto& name : keep_priority) {
        const int i = index_of(name);
        if (i < 0 || i == size_idx) continue;
        if (std::find(excluded.begin(), excluded.end(), name) != excluded.end()) continue;
        bool drop = false;
        for (int k : kept) {
            if (exceeds(i, k)) {
                drop = true;
                break;
            }
        }
        if (drop) {
            excluded.push_back(name);
        } else {
            kept.push_back(i);
        }
    }
    return excluded;
}

WilcoxonResult wilcoxon_ranksum(const std::vector<double>& group_a,
                                const std::vector<double>& group_b, bool force_approx) {
    if (group_a.empty() || group_b.empty()) {
        throw std::invalid_argument("wilcoxon_ranksum: empty group");
    }
    const int n1 = static_cast<int>(group_a.size());
    const int n2 = static_cast<int>(group_b.size());
    const int N = n1 + n2;

    std::vector<double> combined = group_a;
    combined.insert(combined.end(), group_b.begin(), group_b.end());
    const auto ranks = midranks(combined);

    double rank_sum_a = 0.0;
    for (int i = 0; i < n1; ++i) rank_sum_a += ranks[i];
    const double U = rank_sum_a - static_cast<double>(n1) * (n1 + 1) / 2.0;

    // tie sizes
    std::map<double, int> counts;
    for (double v : combined) ++counts[v];
    bool has_ties = false;
    double tie_term = 0.0;
    for (const auto& [value, t] : counts) {
        if (t > 1) has_ties = true;
        tie_term += static_cast<double>(t) * t * t - t;
    }

    WilcoxonResult result;
    result.statistic_U = U;
    result.n1 = n1;
    result.n2 = n2;

    if (!force_approx && !has_ties && N <= 20) {
        result.exact = true;
        const auto dp = rank_sum_counts(N, n1);
        const int offset = n1 * (n1 + 1) / 2;  // rank sum -> U
        double total = 0.0, le = 0.0, ge = 0.0;
        const int u_obs = static_cast<int>(std::llround(U));
        for (int s = offset; s < static_cast<int>(dp[n1].size()); ++s) {
            const double c = dp[n1][s];
            if (c == 0.0) continue;
            const int u = s - offset;
            total += c;
            if (u <= u_obs) le += c;
            if (u >= u_obs) ge += c;
        }
        result.p_value = std::min(1.0, 2.0 * std::min(le, ge) / total);
        return result;
    }

    const double mu = static_cast<double>(n1) * n2 / 2.0;
    const double var = static_cast<double>(n1) * n2 / 12.0 *
                       (static_cast<double>(N + 1) -
                        tie_term / (static_cast<double>(N) * (N - 1)));
    if (var <= 0.0) {
        result.p_value = 1.0;
        return result;
    }
    const double z = std::max(0.0, std::fabs(U - mu) - 0.5) / std::sqrt(var);
    result.p_value = std::min(1.0, 2.0 * normal_sf(z));
    return result;
}

PcaResult pca(const std::vector<std::vector<double>>& rows) {
    if (rows.size() < 2 || rows.front().size() < 2) {
        throw std::invalid_argument("pca: need at least 2 rows and 2 columns");
    }
    const std::size_t n = rows.size();
    const std::size_t d = rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != d) throw std::invalid_argument("pca: ragged input");
        for (double x : row) {
            if (!std::isfinite(x)) throw std::invalid_argument("pca: non-finite input");
        }
    }

    std::vector<double> mean(d, 0.0);
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < d; ++c) mean[c] += row[c];
    }
    for (auto& m : mean) m /= static_cast<double>(n);

    std::vector<std::vector<double>> centered(n, std::vector<double>(d));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < d; ++c) centered[r][c] = rows[r][c] - mean[c];
    }

    std::vector<std::vector<double>> cov(d, std::vector<double>(d, 0.0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i; j < d; ++j) {
                cov[i][j] += centered[r][i] * centered[r][j];
            }
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            cov[i][j] /= static_cast<double>(n - 1);
            cov[j][i] = cov[i][j];
        }
    }

    // cyclic Jacobi
    std::vector<std::vector<double>> a = cov;
    std::vector<std::vector<double>> v(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i) v[i][i] = 1.0;

    constexpr double kTol = 1e-12;
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) off += a[p][q] * a[p][q];
        }
        if (std::sqrt(off) < kTol) break;
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                if (std::fabs(a[p][q]) < kTol * 1e-3) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < d; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(d);
    for (std::size_t i = 0; i < d; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a[x][x] > a[y][y]; });

    PcaResult result;
    result.loadings.assign(d, std::vector<double>(d, 0.0));
    result.explained_variance.resize(d);
    for (std::size_t c = 0; c < d; ++c) {
        const std::size_t src = order[c];
        result.explained_variance[c] = a[src][src];
        // sign convention: largest-magnitude entry positive
        std::size_t arg = 0;
        for (std::size_t r = 1; r < d; ++r) {
            if (std::fabs(v[r][src]) > std::fabs(v[arg][src])) arg = r;
        }
        const double sign = v[arg][src] < 0.0 ? -1.0 : 1.0;
        for (std::size_t r = 0; r < d; ++r) result.loadings[r][c] = sign * v[r][src];
    }

    result.scores.assign(n, std::vector<double>(d, 0.0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            double dot = 0.0;
            for (std::size_t k = 0; k < d; ++k) dot += centered[r][k] * result.loadings[k][c];
            result.scores[r][c] = dot;
        }
    }
    return result;
}

FiveNumber five_number_summary(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("five_number_summary: empty");
    std::sort(values.begin(), values.end());
    auto quantile = [&](double q) {
        const double pos = q * (static_cast<double>(values.size()) - 1.0);
        const std::size_t lo = static_cast<std::size_t>(pos);
        const std::size_t hi = std::min(lo + 1, values.size() - 1);
        const double frac = pos - static_cast<double>(lo);
        return values[lo] * (1.0 - frac) + values[hi] * frac;
    };
    return FiveNumber{values.front(), quantile(0.25), quantile(0.5), quantile(0.75),
                      values.back()};
}

double mean_of(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("mean_of: empty");
    return column_mean(values);
}

double median_of(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median_of: empty");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

}  // namespace drama
