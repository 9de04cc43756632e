#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "drama/play.hpp"

namespace drama {

/// Weighted undirected co-occurrence network. Nodes are characters that
/// appear in at least one scene; an edge weight counts shared scenes.
struct CharacterGraph {
    std::vector<std::string> node_ids;                       // sorted, unique
    std::map<std::pair<int, int>, int> edges;                // (i<j) -> weight

    int node_count() const { return static_cast<int>(node_ids.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int index_of(const std::string& id) const;               // -1 if absent

    /// Unweighted adjacency lists, neighbor indices sorted.
    std::vector<std::vector<int>> adjacency() const;

    bool operator==(const CharacterGraph&) const = default;
};

struct GraphMetrics {
    int n_nodes = 0;
    double avg_clustering = 0.0;
    double density = 0.0;
    std::optional<double> avg_path_length;  // largest component; unset if it has < 2 nodes
    int diameter = 0;                       // largest component
    double max_betweenness = 0.0;           // normalized per component
    double avg_deg_max_deg_ratio = 0.0;
    double max_deg_over_n_minus_1 = 0.0;
    int n_components = 1;
};

struct DegenerateGraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scene co-occurrence graph: every unordered pair of characters sharing a
/// scene gains +1 weight per shared scene.
CharacterGraph build_graph(const Play& play);

/// As build_graph but over a subset of the scenes.
CharacterGraph build_graph_from_scenes(const std::vector<Scene>& scenes);

/// All network-level measures. BFS sources and betweenness accumulation run
/// in parallel; results are independent of thread count.
GraphMetrics compute_metrics(const CharacterGraph& g);

/// Single-threaded reference implementation of compute_metrics. Kept for
/// testing and for the benchmark target.
GraphMetrics compute_metrics_serial(const CharacterGraph& g);

/// Sum of incident edge weights per node id; isolated nodes map to 0.
std::map<std::string, double> weighted_degrees(const CharacterGraph& g);

/// Index of the component holding avg_path_length/diameter: the largest one,
/// ties broken toward the component containing the smallest node id.
std::vector<int> component_labels(const CharacterGraph& g, int& n_components);

}  // namespace drama
