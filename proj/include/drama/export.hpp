#pragma once

#include <string>
#include <vector>

#include "drama/ablate.hpp"
#include "drama/features.hpp"
#include "drama/graph.hpp"
#include "drama/learn.hpp"
#include "drama/stats.hpp"

#include <json.hpp>

namespace drama {

/// GEXF 1.2 document with node labels and edge weights.
std::string to_gexf(const CharacterGraph& g);

/// `source,target,weight` edge list.
std::string to_edge_csv(const CharacterGraph& g);

/// One row per play, retained features in canonical order.
std::string features_csv(const std::vector<FeatureVector>& features);

/// Fallback flags plus the unscored excluded-measure side table.
nlohmann::json features_meta_json(const std::vector<FeatureVector>& features);

/// Square matrix with header row and column.
std::string correlation_csv(const CorrelationMatrix& m);

/// `feature,U,p_value,significant@0.05`.
std::string wilcoxon_csv(const std::vector<std::string>& names,
                         const std::vector<WilcoxonResult>& results);

std::string pca_scores_csv(const Dataset& ds, const PcaResult& p);
std::string pca_loadings_csv(const std::vector<std::string>& feature_names,
                             const PcaResult& p);
std::string pca_variance_csv(const PcaResult& p);

nlohmann::json classification_json(const ClassificationReport& report);
std::string classification_text(const ClassificationReport& report);

/// `step,eliminated,accuracy`.
std::string rfe_csv(const std::vector<RfeStep>& trace);

/// `play_id,genre,act_removed,density_full,density_ablated,delta`.
std::string ablation_csv(const std::vector<AblationRecord>& records);
nlohmann::json ablation_summary_json(const LastActEffect& effect);
std::string per_act_csv(const std::vector<PerActCell>& cells);

}  // namespace drama
