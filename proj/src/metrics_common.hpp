#pragma once

#include <vector>

#include "drama/graph.hpp"

namespace drama::detail {

struct MetricsScaffold {
    std::vector<std::vector<int>> adj;
    std::vector<int> degree;
    std::vector<int> comp_label;
    std::vector<int> comp_size;
    int n_components = 0;
    int focus_comp = 0;                 // largest, ties toward smallest node id
    std::vector<int> focus_nodes;
};

MetricsScaffold build_scaffold(const CharacterGraph& g);

long double local_clustering(const std::vector<std::vector<int>>& adj, int node);

/// Single-source shortest-path accumulation (Brandes). Returns the dependency
/// vector delta for this source; dist/sigma are scratch sized n.
std::vector<double> brandes_dependencies(const std::vector<std::vector<int>>& adj, int source);

/// BFS distances from source; unreachable nodes get -1.
std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int source);

void fill_degree_ratios(const MetricsScaffold& s, GraphMetrics& m);

double betweenness_normalizer(int component_size);

}  // namespace drama::detail
