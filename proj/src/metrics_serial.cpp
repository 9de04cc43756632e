#include <algorithm>
#include <numeric>

#include "drama/graph.hpp"
#include "metrics_common.hpp"

namespace drama {

GraphMetrics compute_metrics_serial(const CharacterGraph& g) {
    const int n = g.node_count();
    if (n < 2) throw DegenerateGraphError("compute_metrics requires at least 2 nodes");

    auto s = detail::build_scaffold(g);
    GraphMetrics m;
    m.n_nodes = n;
    m.n_components = s.n_components;
    m.density = 2.0 * g.edge_count() / (static_cast<double>(n) * (n - 1));
    detail::fill_degree_ratios(s, m);

    // extended-precision mean, matching the parallel kernel bit for bit
    long double clustering_sum = 0.0L;
    for (int i = 0; i < n; ++i) clustering_sum += detail::local_clustering(s.adj, i);
    m.avg_clustering = static_cast<double>(clustering_sum / n);

    const int fc = static_cast<int>(s.focus_nodes.size());
    if (fc >= 2) {
        double total = 0.0;
        int diameter = 0;
        for (int source : s.focus_nodes) {
            auto dist = detail::bfs_distances(s.adj, source);
            for (int node : s.focus_nodes) {
                total += dist[node];
                diameter = std::max(diameter, dist[node]);
            }
        }
        m.avg_path_length = total / (static_cast<double>(fc) * (fc - 1));
        m.diameter = diameter;
    }

    std::vector<double> raw(n, 0.0);
    for (int source = 0; source < n; ++source) {
        auto delta = detail::brandes_dependencies(s.adj, source);
        for (int v = 0; v < n; ++v) raw[v] += delta[v];
    }
    double max_bc = 0.0;
    for (int v = 0; v < n; ++v) {
        double bc = raw[v] / 2.0 * detail::betweenness_normalizer(s.comp_size[s.comp_label[v]]);
        max_bc = std::max(max_bc, bc);
    }
    m.max_betweenness = max_bc;
    return m;
}

}  // namespace drama
