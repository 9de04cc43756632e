#include "drama/kmeans1d.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

namespace drama {
namespace {

// SSE of sorted[l, r) via prefix sums
double segment_sse(const std::vector<double>& prefix, const std::vector<double>& prefix_sq,
                   std::size_t l, std::size_t r) {
    const double len = static_cast<double>(r - l);
    const double sum = prefix[r] - prefix[l];
    const double sumsq = prefix_sq[r] - prefix_sq[l];
    return sumsq - sum * sum / len;
}

}  // namespace

std::vector<Band> kmeans3_1d(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("kmeans3_1d: empty input");
    const std::size_t n = values.size();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> sorted(n);
    for (std::size_t k = 0; k < n; ++k) sorted[k] = values[order[k]];

    std::vector<double> distinct = sorted;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<Band> labels(n, Band::High);
    if (distinct.size() < 3) {
        // distinct values labeled from High downward
        for (std::size_t i = 0; i < n; ++i) {
            labels[order[i]] =
                values[order[i]] == distinct.back() ? Band::High : Band::Medium;
        }
        return labels;
    }

    std::vector<double> prefix(n + 1, 0.0), prefix_sq(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        prefix[k + 1] = prefix[k] + sorted[k];
        prefix_sq[k + 1] = prefix_sq[k] + sorted[k] * sorted[k];
    }

    double best = std::numeric_limits<double>::infinity();
    std::size_t best_i = 1, best_j = 2;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double low_cost = segment_sse(prefix, prefix_sq, 0, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double cost = low_cost + segment_sse(prefix, prefix_sq, i, j) +
                                segment_sse(prefix, prefix_sq, j, n);
            if (cost < best) {
                best = cost;
                best_i = i;
                best_j = j;
            }
        }
    }

    // contiguous clusters in ascending order: [0,i) Low, [i,j) Medium, [j,n) High
    for (std::size_t k = 0; k < n; ++k) {
        Band band = k < best_i ? Band::Low : (k < best_j ? Band::Medium : Band::High);
        labels[order[k]] = band;
    }
    return labels;
}

double cluster_sse(const std::vector<double>& values, const std::vector<Band>& labels) {
    std::array<double, 3> sum{}, count{};
    for (std::size_t k = 0; k < values.size(); ++k) {
        auto b = static_cast<std::size_t>(labels[k]);
        sum[b] += values[k];
        count[b] += 1.0;
    }
    double sse = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        auto b = static_cast<std::size_t>(labels[k]);
        const double mean = sum[b] / count[b];
        sse += (values[k] - mean) * (values[k] - mean);
    }
    return sse;
}

}  // namespace drama
