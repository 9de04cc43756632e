// Compares the OpenMP metric kernels against the serial reference on random
// graphs of growing size.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "drama/graph.hpp"

using namespace drama;

namespace {

CharacterGraph random_graph(int n, double edge_prob, std::mt19937& rng) {
    CharacterGraph g;
    for (int i = 0; i < n; ++i) g.node_ids.push_back("n" + std::to_string(100000 + i));
    std::bernoulli_distribution coin(edge_prob);
    std::uniform_int_distribution<int> weight(1, 5);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng)) g.edges[{i, j}] = weight(rng);
        }
    }
    return g;
}

template <typename F>
double time_ms(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

bool metrics_close(const GraphMetrics& a, const GraphMetrics& b) {
    auto close = [](double x, double y) { return std::fabs(x - y) < 1e-9; };
    return close(a.avg_clustering, b.avg_clustering) && close(a.density, b.density) &&
           close(a.max_betweenness, b.max_betweenness) && a.diameter == b.diameter &&
           close(a.avg_path_length.value_or(-1), b.avg_path_length.value_or(-1));
}

}  // namespace

int main() {
    std::mt19937 rng(20240613);
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%8s %10s %14s %14s %8s\n", "nodes", "edges", "parallel[ms]", "serial[ms]",
                "match");
    for (int n : {100, 250, 500, 1000, 2000}) {
        const auto g = random_graph(n, 10.0 / n, rng);
        GraphMetrics mp, ms;
        const double tp = time_ms([&] { mp = compute_metrics(g); });
        const double ts = time_ms([&] { ms = compute_metrics_serial(g); });
        std::printf("%8d %10d %14.2f %14.2f %8s\n", n, g.edge_count(), tp, ts,
                    metrics_close(mp, ms) ? "yes" : "NO");
    }
    return 0;
}
