#include "drama/graph.hpp"

#include <algorithm>
#include <set>

namespace drama {

int CharacterGraph::index_of(const std::string& id) const {
    auto it = std::lower_bound(node_ids.begin(), node_ids.end(), id);
    if (it == node_ids.end() || *it != id) return -1;
    return static_cast<int>(it - node_ids.begin());
}

std::vector<std::vector<int>> CharacterGraph::adjacency() const {
    std::vector<std::vector<int>> adj(node_ids.size());
    for (const auto& [pair, weight] : edges) {
        adj[pair.first].push_back(pair.second);
        adj[pair.second].push_back(pair.first);
    }
    for (auto& neighbors : adj) std::sort(neighbors.begin(), neighbors.end());
    return adj;
}

CharacterGraph build_graph(const Play& play) {
    return build_graph_from_scenes(play.scenes);
}

CharacterGraph build_graph_from_scenes(const std::vector<Scene>& scenes) {
    CharacterGraph g;
    std::set<std::string> ids;
    for (const auto& scene : scenes) {
        ids.insert(scene.present_ids.begin(), scene.present_ids.end());
    }
    g.node_ids.assign(ids.begin(), ids.end());

    for (const auto& scene : scenes) {
        std::vector<int> cast;
        cast.reserve(scene.present_ids.size());
        for (const auto& id : scene.present_ids) cast.push_back(g.index_of(id));
        for (std::size_t a = 0; a < cast.size(); ++a) {
            for (std::size_t b = a + 1; b < cast.size(); ++b) {
                auto key = std::minmax(cast[a], cast[b]);
                ++g.edges[{key.first, key.second}];
            }
        }
    }
    return g;
}

std::map<std::string, double> weighted_degrees(const CharacterGraph& g) {
    std::map<std::string, double> degrees;
    for (const auto& id : g.node_ids) degrees[id] = 0.0;
    for (const auto& [pair, weight] : g.edges) {
        degrees[g.node_ids[pair.first]] += weight;
        degrees[g.node_ids[pair.second]] += weight;
    }
    return degrees;
}

std::vector<int> component_labels(const CharacterGraph& g, int& n_components) {
    const int n = g.node_count();
    const auto adj = g.adjacency();
    std::vector<int> label(n, -1);
    n_components = 0;
    for (int start = 0; start < n; ++start) {
        if (label[start] != -1) continue;
        const int comp = n_components++;
        std::vector<int> stack{start};
        label[start] = comp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (label[v] == -1) {
                    label[v] = comp;
                    stack.push_back(v);
                }
            }
        }
    }
    return label;
}

}  // namespace drama
