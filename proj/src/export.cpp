#include "drama/export.hpp"

#include <cmath>
#include <sstream>

#include "drama/io.hpp"

namespace drama {
namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

using io::format_double;

}  // namespace

std::string to_gexf(const CharacterGraph& g) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<gexf xmlns=\"http://www.gexf.net/1.2draft\" version=\"1.2\">\n"
        << "  <graph defaultedgetype=\"undirected\" mode=\"static\">\n"
        << "    <nodes>\n";
    for (const auto& id : g.node_ids) {
        out << "      <node id=\"" << xml_escape(id) << "\" label=\"" << xml_escape(id)
            << "\"/>\n";
    }
    out << "    </nodes>\n    <edges>\n";
    int edge_id = 0;
    for (const auto& [pair, weight] : g.edges) {
        out << "      <edge id=\"" << edge_id++ << "\" source=\""
            << xml_escape(g.node_ids[pair.first]) << "\" target=\""
            << xml_escape(g.node_ids[pair.second]) << "\" weight=\"" << weight << "\"/>\n";
    }
    out << "    </edges>\n  </graph>\n</gexf>\n";
    return out.str();
}

std::string to_edge_csv(const CharacterGraph& g) {
    std::ostringstream out;
    out << "source,target,weight\n";
    for (const auto& [pair, weight] : g.edges) {
        out << csv_field(g.node_ids[pair.first]) << ',' << csv_field(g.node_ids[pair.second])
            << ',' << weight << '\n';
    }
    return out.str();
}

std::string features_csv(const std::vector<FeatureVector>& features) {
    std::ostringstream out;
    out << "play_id,genre";
    for (const auto& name : retained_feature_names()) out << ',' << name;
    out << '\n';
    for (const auto& f : features) {
        out << csv_field(f.play_id) << ',' << to_string(f.genre);
        for (double value : f.retained()) out << ',' << format_double(value);
        out << '\n';
    }
    return out.str();
}

nlohmann::json features_meta_json(const std::vector<FeatureVector>& features) {
    nlohmann::json j;
    j["extra_features"] = extra_feature_names();
    nlohmann::json extras = nlohmann::json::array();
    nlohmann::json fallbacks = nlohmann::json::array();
    for (const auto& f : features) {
        nlohmann::json row;
        row["play_id"] = f.play_id;
        const auto& names = extra_feature_names();
        const auto values = f.extras();
        for (std::size_t i = 0; i < names.size(); ++i) row[names[i]] = values[i];
        extras.push_back(std::move(row));
        if (f.speech_fallback) fallbacks.push_back(f.play_id);
    }
    j["extras"] = std::move(extras);
    j["avg_character_speech_fallback"] = std::move(fallbacks);
    return j;
}

std::string correlation_csv(const CorrelationMatrix& m) {
    std::ostringstream out;
    out << "feature";
    for (const auto& name : m.feature_names) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < m.feature_names.size(); ++i) {
        out << m.feature_names[i];
        for (std::size_t j = 0; j < m.feature_names.size(); ++j) {
            out << ',';
            if (std::isfinite(m.values[i][j])) out << format_double(m.values[i][j]);
            else out << "NA";
        }
        out << '\n';
    }
    return out.str();
}

std::string wilcoxon_csv(const std::vector<std::string>& names,
                         const std::vector<WilcoxonResult>& results) {
    std::ostringstream out;
    out << "feature,U,p_value,significant@0.05\n";
    for (std::size_t i = 0; i < names.size(); ++i) {
        out << names[i] << ',' << format_double(results[i].statistic_U) << ','
            << format_double(results[i].p_value) << ','
            << (results[i].p_value < 0.05 ? "yes" : "no") << '\n';
    }
    return out.str();
}

std::string pca_scores_csv(const Dataset& ds, const PcaResult& p) {
    std::ostringstream out;
    out << "play_id,genre";
    for (std::size_t c = 0; c < p.explained_variance.size(); ++c) out << ",pc" << c + 1;
    out << '\n';
    for (std::size_t r = 0; r < ds.n_rows(); ++r) {
        out << csv_field(ds.play_ids[r]) << ','
            << (ds.labels[r] > 0 ? "comedy" : "tragedy");
        for (double score : p.scores[r]) out << ',' << format_double(score);
        out << '\n';
    }
    return out.str();
}

std::string pca_loadings_csv(const std::vector<std::string>& feature_names,
                             const PcaResult& p) {
    std::ostringstream out;
    out << "feature";
    for (std::size_t c = 0; c < p.explained_variance.size(); ++c) out << ",pc" << c + 1;
    out << '\n';
    for (std::size_t r = 0; r < feature_names.size(); ++r) {
        out << feature_names[r];
        for (double loading : p.loadings[r]) out << ',' << format_double(loading);
        out << '\n';
    }
    return out.str();
}

std::string pca_variance_csv(const PcaResult& p) {
    std::ostringstream out;
    out << "component,explained_variance\n";
    for (std::size_t c = 0; c < p.explained_variance.size(); ++c) {
        out << "pc" << c + 1 << ',' << format_double(p.explained_variance[c]) << '\n';
    }
    return out.str();
}

nlohmann::json classification_json(const ClassificationReport& report) {
    nlohmann::json j;
    j["confusion"] = {{"comedy_as_comedy", report.comedy_as_comedy},
                      {"comedy_as_tragedy", report.comedy_as_tragedy},
                      {"tragedy_as_comedy", report.tragedy_as_comedy},
                      {"tragedy_as_tragedy", report.tragedy_as_tragedy}};
    auto pack = [](const ClassMetrics& m) {
        return nlohmann::json{{"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}};
    };
    j["comedy"] = pack(report.comedy);
    j["tragedy"] = pack(report.tragedy);
    j["overall_accuracy"] = report.overall_accuracy;
    j["mean_class_recall"] = report.mean_class_recall;
    j["degenerate_folds"] = report.degenerate_folds;
    nlohmann::json predictions = nlohmann::json::array();
    for (std::size_t i = 0; i < report.play_ids.size(); ++i) {
        predictions.push_back({{"play_id", report.play_ids[i]},
                               {"predicted", report.predicted[i] > 0 ? "comedy" : "tragedy"},
                               {"decision_value", report.decision_values[i]}});
    }
    j["predictions"] = std::move(predictions);
    return j;
}

std::string classification_text(const ClassificationReport& report) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << "Leave-one-out classification over " << report.total() << " plays.\n"
        << "comedy:  recall " << report.comedy.recall << "  precision "
        << report.comedy.precision << "  F1 " << report.comedy.f1 << '\n'
        << "tragedy: recall " << report.tragedy.recall << "  precision "
        << report.tragedy.precision << "  F1 " << report.tragedy.f1 << '\n'
        << "overall accuracy " << report.overall_accuracy << "\n";
    return out.str();
}

std::string rfe_csv(const std::vector<RfeStep>& trace) {
    std::ostringstream out;
    out << "step,eliminated,accuracy\n";
    for (const auto& step : trace) {
        out << step.step << ',' << step.eliminated << ','
            << format_double(step.loo_accuracy) << '\n';
    }
    return out.str();
}

std::string ablation_csv(const std::vector<AblationRecord>& records) {
    std::ostringstream out;
    out << "play_id,genre,act_removed,density_full,density_ablated,delta\n";
    for (const auto& r : records) {
        out << csv_field(r.play_id) << ',' << to_string(r.genre) << ',' << r.act_removed
            << ',' << format_double(r.density_full) << ',' << format_double(r.density_ablated)
            << ',' << format_double(r.delta) << '\n';
    }
    return out.str();
}

nlohmann::json ablation_summary_json(const LastActEffect& effect) {
    nlohmann::json j;
    nlohmann::json genres = nlohmann::json::array();
    for (const auto& s : effect.by_genre) {
        genres.push_back({{"genre", to_string(s.genre)},
                          {"plays", s.plays},
                          {"mean_delta", s.mean_delta},
                          {"median_delta", s.median_delta},
                          {"five_number",
                           {{"min", s.delta_summary.min},
                            {"q1", s.delta_summary.q1},
                            {"median", s.delta_summary.median},
                            {"q3", s.delta_summary.q3},
                            {"max", s.delta_summary.max}}}});
    }
    j["by_genre"] = std::move(genres);
    j["density_wilcoxon_full"] = {{"U", effect.density_test_full.statistic_U},
                                  {"p_value", effect.density_test_full.p_value}};
    j["density_wilcoxon_ablated"] = {{"U", effect.density_test_ablated.statistic_U},
                                     {"p_value", effect.density_test_ablated.p_value}};
    j["skipped"] = effect.skipped;
    return j;
}

std::string per_act_csv(const std::vector<PerActCell>& cells) {
    std::ostringstream out;
    out << "genre,act,plays,mean_delta,median_delta,min,q1,median,q3,max\n";
    for (const auto& c : cells) {
        out << to_string(c.genre) << ',' << c.act << ',' << c.plays << ','
            << format_double(c.mean_delta) << ',' << format_double(c.median_delta) << ','
            << format_double(c.delta_summary.min) << ',' << format_double(c.delta_summary.q1)
            << ',' << format_double(c.delta_summary.median) << ','
            << format_double(c.delta_summary.q3) << ',' << format_double(c.delta_summary.max)
            << '\n';
    }
    return out.str();
}

}  // namespace drama
