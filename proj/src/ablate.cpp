#include "drama/ablate.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace drama {
namespace {

GenreSummary summarize(Genre genre, const std::vector<double>& deltas) {
    GenreSummary s;
    s.genre = genre;
    s.plays = static_cast<int>(deltas.size());
    if (!deltas.empty()) {
        s.mean_delta = mean_of(deltas);
        s.median_delta = median_of(deltas);
        s.delta_summary = five_number_summary(deltas);
    }
    return s;
}

}  // namespace

double graph_density(const CharacterGraph& g) {
    const int n = g.node_count();
    if (n < 2) throw DegenerateGraphError("graph_density requires at least 2 nodes");
    return 2.0 * g.edge_count() / (static_cast<double>(n) * (n - 1));
}

CharacterGraph ablate_act(const Play& play, int act) {
    if (play.act_count < 2) throw std::invalid_argument("ablate_act: single-act play");
    if (act < 1 || act > play.act_count) throw std::out_of_range("ablate_act: act out of range");
    std::vector<Scene> remaining;
    for (const auto& scene : play.scenes) {
        if (scene.act_index != act) remaining.push_back(scene);
    }
    return build_graph_from_scenes(remaining);
}

LastActEffect last_act_effect(const std::vector<Play>& corpus) {
    LastActEffect effect;
    effect.records.reserve(corpus.size());

    struct Slot {
        AblationRecord record;
        bool ok = false;
        bool skipped = false;
    };
    std::vector<Slot> slots(corpus.size());

#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Play& play = corpus[i];
        if (play.act_count < 2) {
            slots[i].skipped = true;
            continue;
        }
        const auto full = build_graph(play);
        const auto ablated = ablate_act(play, play.act_count);
        if (full.node_count() < 2 || ablated.node_count() < 2) {
            slots[i].skipped = true;
            continue;
        }
        auto& r = slots[i].record;
        r.play_id = play.id;
        r.genre = play.genre;
        r.act_removed = play.act_count;
        r.density_full = graph_density(full);
        r.density_ablated = graph_density(ablated);
        r.delta = r.density_full - r.density_ablated;
        slots[i].ok = true;
    }

    std::vector<double> comedy_deltas, tragedy_deltas;
    std::vector<double> comedy_full, tragedy_full, comedy_ablated, tragedy_ablated;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].skipped) {
            effect.skipped.push_back(corpus[i].id);
            continue;
        }
        if (!slots[i].ok) continue;
        const auto& r = slots[i].record;
        effect.records.push_back(r);
        if (r.genre == Genre::Comedy) {
            comedy_deltas.push_back(r.delta);
            comedy_full.push_back(r.density_full);
            comedy_ablated.push_back(r.density_ablated);
        } else if (r.genre == Genre::Tragedy) {
            tragedy_deltas.push_back(r.delta);
            tragedy_full.push_back(r.density_full);
            tragedy_ablated.push_back(r.density_ablated);
        }
    }

    effect.by_genre.push_back(summarize(Genre::Comedy, comedy_deltas));
    effect.by_genre.push_back(summarize(Genre::Tragedy, tragedy_deltas));

    if (!comedy_full.empty() && !tragedy_full.empty()) {
        effect.density_test_full = wilcoxon_ranksum(comedy_full, tragedy_full);
        effect.density_test_ablated = wilcoxon_ranksum(comedy_ablated, tragedy_ablated);
    }
    return effect;
}

std::vector<PerActCell> per_act_effect(const std::vector<Play>& corpus, int acts_required) {
    if (acts_required < 2) throw std::invalid_argument("per_act_effect: acts_required < 2");

    std::vector<const Play*> selected;
    for (const auto& play : corpus) {
        if (play.act_count == acts_required) selected.push_back(&play);
    }
    if (selected.empty()) {
        std::string msg = "per_act_effect: no plays with exactly " +
                          std::to_string(acts_required) + " acts (corpus size " +
                          std::to_string(corpus.size()) + ")";
        throw std::runtime_error(msg);
    }

    // deltas[act-1][genre 0=comedy 1=tragedy]
    std::vector<std::array<std::vector<double>, 2>> deltas(
        static_cast<std::size_t>(acts_required));

    struct PlayResult {
        std::vector<double> per_act;
        int genre_slot = -1;
        bool ok = false;
    };
    std::vector<PlayResult> results(selected.size());

#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < selected.size(); ++i) {
        const Play& play = *selected[i];
        const auto full = build_graph(play);
        if (full.node_count() < 2) continue;
        const double density_full = graph_density(full);
        PlayResult res;
        res.genre_slot = play.genre == Genre::Comedy ? 0 : 1;
        res.per_act.resize(static_cast<std::size_t>(acts_required), 0.0);
        bool all_ok = true;
        for (int act = 1; act <= acts_required; ++act) {
            const auto ablated = ablate_act(play, act);
            if (ablated.node_count() < 2) {
                all_ok = false;
                break;
            }
            res.per_act[static_cast<std::size_t>(act - 1)] =
                density_full - graph_density(ablated);
        }
        res.ok = all_ok;
        results[i] = std::move(res);
    }

    for (const auto& res : results) {
        if (!res.ok) continue;
        for (int act = 0; act < acts_required; ++act) {
            deltas[static_cast<std::size_t>(act)][static_cast<std::size_t>(res.genre_slot)]
                .push_back(res.per_act[static_cast<std::size_t>(act)]);
        }
    }

    std::vector<PerActCell> cells;
    for (int slot = 0; slot < 2; ++slot) {
        for (int act = 1; act <= acts_required; ++act) {
            const auto& values = deltas[static_cast<std::size_t>(act - 1)]
                                       [static_cast<std::size_t>(slot)];
            PerActCell cell;
            cell.genre = slot == 0 ? Genre::Comedy : Genre::Tragedy;
            cell.act = act;
            cell.plays = static_cast<int>(values.size());
            if (!values.empty()) {
                cell.mean_delta = mean_of(values);
                cell.median_delta = median_of(values);
                cell.delta_summary = five_number_summary(values);
            }
            cells.push_back(cell);
        }
    }
    return cells;
}

}  // namespace drama
