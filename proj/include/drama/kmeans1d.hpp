#pragma once

#include <stdexcept>
#include <vector>

namespace drama {

enum class Band { High, Medium, Low };

/// Exact 1-D 3-means: partitions the values into three contiguous-in-sorted-
/// order clusters minimizing within-cluster SSE, found by dynamic programming
/// over the sorted values. Clusters are ranked High/Medium/Low by descending
/// mean. With fewer than 3 distinct values, distinct values take labels from
/// High downward and the remaining clusters are empty.
std::vector<Band> kmeans3_1d(const std::vector<double>& values);

/// Within-cluster sum of squared deviations of a labeled assignment.
double cluster_sse(const std::vector<double>& values, const std::vector<Band>& labels);

}  // namespace drama
