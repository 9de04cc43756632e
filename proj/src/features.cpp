#include "drama/features.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "drama/kmeans1d.hpp"

namespace drama {
namespace {

Trichotomy proportions(const std::vector<double>& values) {
    const auto labels = kmeans3_1d(values);
    Trichotomy t;
    const double n = static_cast<double>(values.size());
    for (Band b : labels) {
        switch (b) {
            case Band::High: t.high += 1.0; break;
            case Band::Medium: t.medium += 1.0; break;
            case Band::Low: t.low += 1.0; break;
        }
    }
    t.high /= n;
    t.medium /= n;
    t.low /= n;
    return t;
}

std::map<std::string, double> speech_totals(const Play& play) {
    std::map<std::string, double> totals;
    for (const auto& scene : play.scenes) {
        for (const auto& speech : scene.speeches) {
            totals[speech.speaker_id] += static_cast<double>(speech.word_count);
        }
    }
    return totals;
}

}  // namespace

std::array<double, 13> FeatureVector::retained() const {
    return {avg_clustering,       density,       diameter,     max_betweenness,
            max_deg_over_n_minus_1, high_speech, medium_speech, low_speech,
            high_wdeg,            medium_wdeg,   low_wdeg,     avg_character_speech,
            avg_char_per_scene_norm};
}

std::array<double, 4> FeatureVector::extras() const {
    return {avg_path_length, avg_deg_max_deg_ratio, n_components, n_characters};
}

const std::vector<std::string>& retained_feature_names() {
    static const std::vector<std::string> names = {
        "avg_clustering", "density", "diameter", "max_betweenness",
        "max_deg_over_n_minus_1", "high_speech", "medium_speech", "low_speech",
        "high_wdeg", "medium_wdeg", "low_wdeg", "avg_character_speech",
        "avg_char_per_scene_norm"};
    return names;
}

const std::vector<std::string>& extra_feature_names() {
    static const std::vector<std::string> names = {"avg_path_length", "avg_deg_max_deg_ratio",
                                                   "n_components", "n_characters"};
    return names;
}

Trichotomy speech_trichotomy(const Play& play) {
    const auto totals = speech_totals(play);
    std::vector<double> values;
    for (const auto& ch : play.characters) {
        if (ch.is_group) continue;
        auto it = totals.find(ch.id);
        values.push_back(it == totals.end() ? 0.0 : it->second);
    }
    if (values.empty()) throw std::runtime_error("speech_trichotomy: no non-group characters");
    return proportions(values);
}

Trichotomy wdeg_trichotomy(const Play& play, const CharacterGraph& g) {
    const auto degrees = weighted_degrees(g);
    std::vector<double> values;
    for (const auto& ch : play.characters) {
        if (ch.is_group) continue;
        auto it = degrees.find(ch.id);
        values.push_back(it == degrees.end() ? 0.0 : it->second);
    }
    if (values.empty()) throw std::runtime_error("wdeg_trichotomy: no non-group characters");
    return proportions(values);
}

double avg_character_speech(const Play& play, bool* used_fallback) {
    std::map<std::string, int> act_counts;
    std::map<std::string, double> totals;
    for (const auto& scene : play.scenes) {
        for (const auto& speech : scene.speeches) {
            ++act_counts[speech.speaker_id];
            totals[speech.speaker_id] += static_cast<double>(speech.word_count);
        }
    }
    double sum = 0.0;
    int qualifiers = 0;
    for (const auto& [id, count] : act_counts) {
        if (count > 10) {
            sum += totals[id];
            ++qualifiers;
        }
    }
    if (qualifiers > 0) {
        if (used_fallback != nullptr) *used_fallback = false;
        return sum / qualifiers;
    }
    // fallback: mean over all speaking characters
    if (act_counts.empty()) throw std::runtime_error("avg_character_speech: no speeches");
    if (used_fallback != nullptr) *used_fallback = true;
    double total = 0.0;
    for (const auto& [id, words] : totals) total += words;
    return total / static_cast<double>(totals.size());
}

double avg_char_per_scene_norm(const Play& play) {
    if (play.scenes.empty()) throw std::runtime_error("avg_char_per_scene_norm: no scenes");
    double cast_sum = 0.0;
    for (const auto& scene : play.scenes) {
        cast_sum += static_cast<double>(scene.present_ids.size());
    }
    const double n_scenes = static_cast<double>(play.scenes.size());
    return cast_sum / n_scenes / n_scenes;
}

FeatureVector extract_features(const Play& play, const CharacterGraph& g,
                               const GraphMetrics& m) {
    FeatureVector f;
    f.play_id = play.id;
    f.genre = play.genre;

    f.avg_clustering = m.avg_clustering;
    f.density = m.density;
    f.diameter = static_cast<double>(m.diameter);
    f.max_betweenness = m.max_betweenness;
    f.max_deg_over_n_minus_1 = m.max_deg_over_n_minus_1;

    const auto speech = speech_trichotomy(play);
    f.high_speech = speech.high;
    f.medium_speech = speech.medium;
    f.low_speech = speech.low;

    const auto wdeg = wdeg_trichotomy(play, g);
    f.high_wdeg = wdeg.high;
    f.medium_wdeg = wdeg.medium;
    f.low_wdeg = wdeg.low;

    f.avg_character_speech = avg_character_speech(play, &f.speech_fallback);
    f.avg_char_per_scene_norm = avg_char_per_scene_norm(play);

    f.avg_path_length = m.avg_path_length.value_or(0.0);
    f.avg_deg_max_deg_ratio = m.avg_deg_max_deg_ratio;
    f.n_components = static_cast<double>(m.n_components);
    f.n_characters = static_cast<double>(play.characters.size());
    return f;
}

std::vector<FeatureVector> extract_corpus_features(const std::vector<Play>& plays) {
    std::vector<FeatureVector> features(plays.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < plays.size(); ++i) {
        const auto g = build_graph(plays[i]);
        const auto m = compute_metrics(g);
        features[i] = extract_features(plays[i], g, m);
    }
    return features;
}

Dataset assemble(const std::vector<FeatureVector>& features) {
    if (features.size() < 2) throw std::runtime_error("assemble: need at least 2 plays");

    Dataset ds;
    ds.feature_names = retained_feature_names();
    ds.extra_names = extra_feature_names();
    for (const auto& f : features) {
        ds.play_ids.push_back(f.play_id);
        ds.labels.push_back(f.genre == Genre::Comedy ? +1 : -1);
        const auto row = f.retained();
        ds.matrix.emplace_back(row.begin(), row.end());
        const auto extra = f.extras();
        ds.extras.emplace_back(extra.begin(), extra.end());
    }

    const std::size_t rows = ds.matrix.size();
    const std::size_t cols = ds.feature_names.size();
    for (std::size_t c = 0; c < cols; ++c) {
        double mean = 0.0;
        for (std::size_t r = 0; r < rows; ++r) mean += ds.matrix[r][c];
        mean /= static_cast<double>(rows);
        double var = 0.0;
        for (std::size_t r = 0; r < rows; ++r) {
            const double d = ds.matrix[r][c] - mean;
            var += d * d;
        }
        var /= static_cast<double>(rows - 1);  // sample standard deviation
        if (var <= 0.0) {
            ds.constant_columns.push_back(ds.feature_names[c]);
            for (std::size_t r = 0; r < rows; ++r) ds.matrix[r][c] = 0.0;
        } else {
            const double sd = std::sqrt(var);
            for (std::size_t r = 0; r < rows; ++r) ds.matrix[r][c] = (ds.matrix[r][c] - mean) / sd;
        }
    }
    return ds;
}

}  // namespace drama
