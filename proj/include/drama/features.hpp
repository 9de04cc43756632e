#pragma once

#include <array>
#include <string>
#include <vector>

#include "drama/graph.hpp"
#include "drama/play.hpp"

namespace drama {

/// Proportions of characters in the High/Medium/Low cluster of a
/// per-character quantity. Sums to 1 over the qualifying character set.
struct Trichotomy {
    double high = 0.0;
    double medium = 0.0;
    double low = 0.0;
};

/// The 13 size-independent measures of one play, plus the measures excluded
/// by the correlation screen (kept for the correlation analysis).
struct FeatureVector {
    std::string play_id;
    Genre genre = Genre::Other;

    double avg_clustering = 0.0;
    double density = 0.0;
    double diameter = 0.0;
    double max_betweenness = 0.0;
    double max_deg_over_n_minus_1 = 0.0;
    double high_speech = 0.0;
    double medium_speech = 0.0;
    double low_speech = 0.0;
    double high_wdeg = 0.0;
    double medium_wdeg = 0.0;
    double low_wdeg = 0.0;
    double avg_character_speech = 0.0;
    double avg_char_per_scene_norm = 0.0;

    // excluded measures and raw size, unscored
    double avg_path_length = 0.0;
    double avg_deg_max_deg_ratio = 0.0;
    double n_components = 0.0;
    double n_characters = 0.0;

    bool speech_fallback = false;  // no character spoke more than 10 times

    std::array<double, 13> retained() const;
    std::array<double, 4> extras() const;
};

/// Canonical column order of the retained features.
const std::vector<std::string>& retained_feature_names();
const std::vector<std::string>& extra_feature_names();

/// z-scored feature matrix with binary genre labels (+1 Comedy, -1 Tragedy).
struct Dataset {
    std::vector<std::string> play_ids;
    std::vector<std::string> feature_names;
    std::vector<std::vector<double>> matrix;   // rows = plays
    std::vector<int> labels;
    std::vector<std::string> extra_names;
    std::vector<std::vector<double>> extras;   // unscored side table
    std::vector<std::string> constant_columns;

    std::size_t n_rows() const { return matrix.size(); }
    std::size_t n_cols() const { return feature_names.size(); }
};

Trichotomy speech_trichotomy(const Play& play);
Trichotomy wdeg_trichotomy(const Play& play, const CharacterGraph& g);

/// Mean total word count over characters with more than 10 speech acts.
/// If no character qualifies, falls back to the mean over all speaking
/// characters and sets *used_fallback.
double avg_character_speech(const Play& play, bool* used_fallback = nullptr);

/// (mean scene cast size) / number of scenes.
double avg_char_per_scene_norm(const Play& play);

FeatureVector extract_features(const Play& play, const CharacterGraph& g,
                               const GraphMetrics& m);

/// Per-play extraction for a whole corpus, parallel over plays.
std::vector<FeatureVector> extract_corpus_features(const std::vector<Play>& plays);

/// z-scores each column (sample standard deviation); constant columns map to
/// all-zero and are reported in constant_columns. Throws with < 2 plays.
Dataset assemble(const std::vector<FeatureVector>& features);

}  // namespace drama
