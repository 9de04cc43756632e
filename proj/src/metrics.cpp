#include <algorithm>
#include <deque>
#include <numeric>

#include "drama/graph.hpp"
#include "metrics_common.hpp"

namespace drama {
namespace detail {

MetricsScaffold build_scaffold(const CharacterGraph& g) {
    MetricsScaffold s;
    s.adj = g.adjacency();
    const int n = g.node_count();
    s.degree.resize(n);
    for (int i = 0; i < n; ++i) s.degree[i] = static_cast<int>(s.adj[i].size());

    s.comp_label = component_labels(g, s.n_components);
    s.comp_size.assign(s.n_components, 0);
    for (int label : s.comp_label) ++s.comp_size[label];

    // node_ids are sorted, so the first node of a maximal component breaks
    // ties toward the lexicographically smallest id
    int max_size = *std::max_element(s.comp_size.begin(), s.comp_size.end());
    for (int i = 0; i < n; ++i) {
        if (s.comp_size[s.comp_label[i]] == max_size) {
            s.focus_comp = s.comp_label[i];
            break;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (s.comp_label[i] == s.focus_comp) s.focus_nodes.push_back(i);
    }
    return s;
}

long double local_clustering(const std::vector<std::vector<int>>& adj, int node) {
    const auto& neighbors = adj[node];
    const int d = static_cast<int>(neighbors.size());
    if (d < 2) return 0.0L;
    int links = 0;
    for (std::size_t a = 0; a < neighbors.size(); ++a) {
        for (std::size_t b = a + 1; b < neighbors.size(); ++b) {
            if (std::binary_search(adj[neighbors[a]].begin(), adj[neighbors[a]].end(),
                                   neighbors[b])) {
                ++links;
            }
        }
    }
    return 2.0L * links / (static_cast<long double>(d) * (d - 1));
}

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int source) {
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[u]) {
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

std::vector<double> brandes_dependencies(const std::vector<std::vector<int>>& adj, int source) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> dist(n, -1);
    std::vector<double> sigma(n, 0.0);
    std::vector<double> delta(n, 0.0);
    std::vector<int> order;
    order.reserve(n);

    std::deque<int> queue{source};
    dist[source] = 0;
    sigma[source] = 1.0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        order.push_back(u);
        for (int v : adj[u]) {
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
            if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
        }
    }

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int w = *it;
        for (int v : adj[w]) {
            if (dist[v] == dist[w] - 1) {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
        }
    }
    delta[source] = 0.0;
    return delta;
}

void fill_degree_ratios(const MetricsScaffold& s, GraphMetrics& m) {
    const int n = static_cast<int>(s.degree.size());
    const int max_deg = *std::max_element(s.degree.begin(), s.degree.end());
    const double avg_deg =
        std::accumulate(s.degree.begin(), s.degree.end(), 0.0) / static_cast<double>(n);
    m.avg_deg_max_deg_ratio = max_deg > 0 ? avg_deg / max_deg : 0.0;
    m.max_deg_over_n_minus_1 = n > 1 ? static_cast<double>(max_deg) / (n - 1) : 0.0;
}

double betweenness_normalizer(int component_size) {
    if (component_size < 3) return 0.0;
    return 2.0 / (static_cast<double>(component_size - 1) * (component_size - 2));
}

}  // namespace detail

GraphMetrics compute_metrics(const CharacterGraph& g) {
    const int n = g.node_count();
    if (n < 2) throw DegenerateGraphError("compute_metrics requires at least 2 nodes");

    auto s = detail::build_scaffold(g);
    GraphMetrics m;
    m.n_nodes = n;
    m.n_components = s.n_components;
    m.density = 2.0 * g.edge_count() / (static_cast<double>(n) * (n - 1));
    detail::fill_degree_ratios(s, m);

    // extended precision throughout the mean: a plain double pipeline lands
    // one ulp off the correctly rounded average on exact rational inputs
    std::vector<long double> clustering(n, 0.0L);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) clustering[i] = detail::local_clustering(s.adj, i);
    m.avg_clustering = static_cast<double>(
        std::accumulate(clustering.begin(), clustering.end(), 0.0L) / n);

    // path metrics over the focus component; per-source results land in fixed
    // slots so the reduction order does not depend on the schedule
    const int fc = static_cast<int>(s.focus_nodes.size());
    if (fc >= 2) {
        std::vector<double> dist_sums(fc, 0.0);
        std::vector<int> ecc(fc, 0);
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < fc; ++k) {
            auto dist = detail::bfs_distances(s.adj, s.focus_nodes[k]);
            double sum = 0.0;
            int max_d = 0;
            for (int node : s.focus_nodes) {
                sum += dist[node];
                max_d = std::max(max_d, dist[node]);
            }
            dist_sums[k] = sum;
            ecc[k] = max_d;
        }
        double total = std::accumulate(dist_sums.begin(), dist_sums.end(), 0.0);
        m.avg_path_length = total / (static_cast<double>(fc) * (fc - 1));
        m.diameter = *std::max_element(ecc.begin(), ecc.end());
    }

    // Brandes: per-source dependency vectors summed in source order
    std::vector<std::vector<double>> contributions(n);
#pragma omp parallel for schedule(dynamic)
    for (int source = 0; source < n; ++source) {
        contributions[source] = detail::brandes_dependencies(s.adj, source);
    }
    std::vector<double> raw(n, 0.0);
    for (int source = 0; source < n; ++source) {
        for (int v = 0; v < n; ++v) raw[v] += contributions[source][v];
    }
    double max_bc = 0.0;
    for (int v = 0; v < n; ++v) {
        // undirected: each pair counted from both endpoints
        double bc = raw[v] / 2.0 * detail::betweenness_normalizer(s.comp_size[s.comp_label[v]]);
        max_bc = std::max(max_bc, bc);
    }
    m.max_betweenness = max_bc;
    return m;
}

}  // namespace drama
