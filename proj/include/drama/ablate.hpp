#pragma once

#include <string>
#include <vector>

#include "drama/graph.hpp"
#include "drama/play.hpp"
#include "drama/stats.hpp"

namespace drama {

struct AblationRecord {
    std::string play_id;
    Genre genre = Genre::Other;
    int act_removed = 0;
    double density_full = 0.0;
    double density_ablated = 0.0;
    double delta = 0.0;  // density_full - density_ablated
};

struct GenreSummary {
    Genre genre = Genre::Other;
    int plays = 0;
    double mean_delta = 0.0;
    double median_delta = 0.0;
    FiveNumber delta_summary;
};

struct LastActEffect {
    std::vector<AblationRecord> records;
    std::vector<GenreSummary> by_genre;  // Comedy, Tragedy
    // genre-difference tests: comedy vs tragedy densities
    WilcoxonResult density_test_full;
    WilcoxonResult density_test_ablated;
    std::vector<std::string> skipped;    // single-act plays
};

struct PerActCell {
    Genre genre = Genre::Other;
    int act = 0;
    int plays = 0;
    double mean_delta = 0.0;
    double median_delta = 0.0;
    FiveNumber delta_summary;
};

/// Graph rebuilt from every scene outside the given act. Throws when the act
/// is out of range or the play has a single act.
CharacterGraph ablate_act(const Play& play, int act);

/// Density computed on the graph's own node set; throws below 2 nodes.
double graph_density(const CharacterGraph& g);

/// One record per play with the last act withheld, per-genre summaries and
/// the genre-difference Wilcoxon tests on full and ablated densities.
/// Single-act plays are skipped, not fatal.
LastActEffect last_act_effect(const std::vector<Play>& corpus);

/// Restricts to plays with exactly acts_required acts and summarizes the
/// density delta per (genre, act position). Throws when nothing matches.
std::vector<PerActCell> per_act_effect(const std::vector<Play>& corpus, int acts_required);

}  // namespace drama
