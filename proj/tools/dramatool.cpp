#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "drama/ablate.hpp"
#include "drama/corpus.hpp"
#include "drama/export.hpp"
#include "drama/features.hpp"
#include "drama/io.hpp"
#include "drama/learn.hpp"
#include "drama/stats.hpp"

namespace fs = std::filesystem;
using namespace drama;

namespace {

// exit codes shared by all subcommands
constexpr int kExitUnreadable = 2;
constexpr int kExitEmptyCorpus = 3;
constexpr int kExitMissingPrereq = 4;
constexpr int kExitUnknownPlay = 5;

struct RunConfig {
    std::string corpus_dir;
    std::string manifest;
    int min_characters = 5;
    int min_scenes = 2;
    bool history_as_tragedy = false;
    double correlation_threshold = 0.9;
    double svm_C = 1.0;
    std::string output_dir;
    int parallelism = 0;  // 0 = auto
    int acts = 0;
    std::string play_id;
};

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
    const char* env_out = std::getenv("DRAMA_OUT");
    cfg.output_dir = env_out != nullptr ? env_out : "out";
    cmd->add_option("--out", cfg.output_dir, "Output directory");
    cmd->add_option("--corpus-dir", cfg.corpus_dir, "Directory of TEI .xml files");
    cmd->add_option("--parallelism", cfg.parallelism, "Worker threads (0 = auto)");
}

void add_ingest_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--manifest", cfg.manifest, "play_id,genre CSV overriding genre metadata");
    cmd->add_option("--min-characters", cfg.min_characters,
                    "Keep plays with strictly more characters than this");
    cmd->add_option("--min-scenes", cfg.min_scenes,
                    "Keep plays with strictly more scenes than this");
    cmd->add_flag("--history-as-tragedy", cfg.history_as_tragedy,
                  "Count history plays as tragedies");
}

void apply_parallelism(const RunConfig& cfg) {
    if (cfg.parallelism > 0) omp_set_num_threads(cfg.parallelism);
}

fs::path corpus_path(const RunConfig& cfg) { return fs::path(cfg.output_dir) / "corpus.json"; }

int run_ingest(const RunConfig& cfg) {
    if (cfg.corpus_dir.empty() || !fs::is_directory(cfg.corpus_dir)) {
        std::cerr << "error: corpus directory not readable: " << cfg.corpus_dir << "\n";
        return kExitUnreadable;
    }
    IngestOptions opts;
    opts.min_characters = cfg.min_characters;
    opts.min_scenes = cfg.min_scenes;
    opts.history_as_tragedy = cfg.history_as_tragedy;
    if (!cfg.manifest.empty()) opts.manifest = cfg.manifest;

    IngestSummary summary;
    const auto plays = ingest_directory(cfg.corpus_dir, opts, summary);

    nlohmann::json js;
    js["parsed"] = summary.parsed;
    js["kept"] = summary.kept;
    js["drop_reasons"] = summary.drop_reasons;
    js["warnings"] = summary.warnings;
    js["failed_files"] = summary.failed_files;
    io::atomic_write(fs::path(cfg.output_dir) / "ingest_summary.json", js.dump(2) + "\n");

    if (plays.empty()) {
        std::cerr << "error: no plays retained\n";
        for (const auto& [reason, count] : summary.drop_reasons) {
            std::cerr << "  " << reason << ": " << count << "\n";
        }
        return kExitEmptyCorpus;
    }
    write_corpus(corpus_path(cfg), plays);

    std::cout << "Ingested " << summary.parsed << " plays, kept " << summary.kept << ".";
    if (!summary.drop_reasons.empty()) {
        std::cout << " Dropped:";
        for (const auto& [reason, count] : summary.drop_reasons) {
            std::cout << " " << reason << "=" << count;
        }
    }
    std::cout << "\n";
    return 0;
}

/// Loads the ingested corpus; a --corpus-dir triggers an implicit ingest.
int load_corpus(const RunConfig& cfg, std::vector<Play>& plays) {
    if (!fs::exists(corpus_path(cfg))) {
        if (!cfg.corpus_dir.empty()) {
            const int rc = run_ingest(cfg);
            if (rc != 0) return rc;
        } else {
            std::cerr << "error: " << corpus_path(cfg).string()
                      << " not found; run the ingest command first\n";
            return kExitMissingPrereq;
        }
    }
    plays = read_corpus(corpus_path(cfg));
    return 0;
}

struct CorpusTables {
    std::vector<FeatureVector> features;
    Dataset dataset;
    // the 16 measures plus character count, for the correlation analysis
    std::vector<std::string> measure_names;
    std::vector<std::vector<double>> measure_columns;
};

CorpusTables build_tables(const std::vector<Play>& plays) {
    CorpusTables t;
    t.features = extract_corpus_features(plays);
    t.dataset = assemble(t.features);

    t.measure_names = retained_feature_names();
    const auto& extras = extra_feature_names();
    t.measure_names.insert(t.measure_names.end(), extras.begin(), extras.end());
    t.measure_columns.assign(t.measure_names.size(), {});
    for (const auto& f : t.features) {
        const auto retained = f.retained();
        const auto extra = f.extras();
        std::size_t c = 0;
        for (double v : retained) t.measure_columns[c++].push_back(v);
        for (double v : extra) t.measure_columns[c++].push_back(v);
    }
    return t;
}

int run_features(const RunConfig& cfg) {
    std::vector<Play> plays;
    if (int rc = load_corpus(cfg, plays); rc != 0) return rc;
    const auto features = extract_corpus_features(plays);
    io::atomic_write(fs::path(cfg.output_dir) / "features.csv", features_csv(features));
    io::atomic_write(fs::path(cfg.output_dir) / "features_meta.json",
                     features_meta_json(features).dump(2) + "\n");
    std::cout << "Wrote feature table for " << features.size() << " plays ("
              << retained_feature_names().size() << " retained columns).\n";
    return 0;
}

int run_correlate(const RunConfig& cfg) {
    std::vector<Play> plays;
    if (int rc = load_corpus(cfg, plays); rc != 0) return rc;
    const auto tables = build_tables(plays);
    const auto matrix = pearson_matrix(tables.measure_names, tables.measure_columns);

    // density first, mirroring its priority in the screen
    std::vector<std::string> priority = {"density"};
    for (const auto& name : tables.measure_names) {
        if (name != "density" && name != "n_characters") priority.push_back(name);
    }
    const auto excluded = correlation_screen(matrix, cfg.correlation_threshold, priority);

    io::atomic_write(fs::path(cfg.output_dir) / "correlation.csv", correlation_csv(matrix));
    nlohmann::json js;
    js["threshold"] = cfg.correlation_threshold;
    js["excluded"] = excluded;
    io::atomic_write(fs::path(cfg.output_dir) / "excluded_features.json", js.dump(2) + "\n");

    std::cout << "Correlation matrix over " << tables.measure_names.size()
              << " measures; screen at |r| > " << cfg.correlation_threshold << " excludes "
              << excluded.size() << " feature(s):";
    for (const auto& name : excluded) std::cout << " " << name;
    std::cout << "\n";
    return 0;
}

int run_test(const RunConfig& cfg) {
    std::vector<Play> plays;
    if (int rc = load_corpus(cfg, plays); rc != 0) return rc;
    const auto tables = build_tables(plays);

    std::vector<WilcoxonResult> results;
    const auto& names = retained_feature_names();
    int significant = 0;
    for (std::size_t c = 0; c < names.size(); ++c) {
        std::vector<double> comedy, tragedy;
        for (std::size_t r = 0; r < tables.features.size(); ++r) {
            const double v = tables.features[r].retained()[c];
            (tables.features[r].genre == Genre::Comedy ? comedy : tragedy).push_back(v);
        }
        results.push_back(wilcoxon_ranksum(comedy, tragedy));
        if (results.back().p_value < 0.05) ++significant;
    }
    io::atomic_write(fs::path(cfg.output_dir) / "wilcoxon.csv", wilcoxon_csv(names, results));
    std::cout << "Wilcoxon rank-sum by genre: " << significant << " of " << names.size()
              << " features significant at 0.05.\n";
    return 0;
}

int run_pca(const RunConfig& cfg) {
    std::vector<Play> plays;
    if (int rc = load_corpus(cfg, plays); rc != 0) return rc;
    const auto tables = build_tables(plays);
    const auto result = pca(tables.dataset.matrix);
    io::atomic_write(fs::path(cfg.output_dir) / "pca_scores.csv",
                     pca_scores_csv(tables.dataset, result));
    io::atomic_write(fs::path(cfg.output_dir) / "pca_loadings.csv",
                     pca_loadings_csv(tables.dataset.feature_names, result));
    io::atomic_write(fs::path(cfg.output_dir) / "pca_variance.csv", pca_variance_csv(result));
    std::cout << "PCA over " << tables.dataset.n_rows() << " plays; first component explains "
              << result.explained_variance.front() << " of "
              << [&] {
                     double t = 0.0;
                     for (double v : result.explained_variance) t += v;
                     return t;
                 }()
              << " total variance.\n";
    return 0;
}

int run_classify(const RunConfig& cfg, bool with_size) {
    std::vector<Play> plays;
    if (int rc = load_corpus(cfg, plays); rc != 0) return rc;
    auto tables = build_tables(plays);
    Dataset ds = with_size ? augment_with_size(tables.dataset) : tables.dataset;
    const auto report = loo_evaluate(ds, cfg.svm_C);
    io::atomic_write(fs::path(cfg.output_dir) / "classification.json",
                     classification_json(report).dump(2) + "\n");
    std::cout << classification_text(report);
    return 0;
}

int run_rfe(const RunConfig& cfg) {
    std::vector<Play> plays;
    if (int rc = load_corpus(cfg, plays); rc != 0) return rc;
    const auto tables = build_tables(plays);
    const auto trace = rfe(tables.dataset, cfg.svm_C);
    io::atomic_write(fs::path(cfg.output_dir) / "rfe.csv", rfe_csv(trace));
    std::cout << "RFE over " << tables.dataset.n_cols() << " features; eliminated first: "
              << trace.front().eliminated << " (accuracy " << trace.front().loo_accuracy
              << " before elimination).\n";
    return 0;
}

int run_ablate(const RunConfig& cfg) {
    std::vector<Play> plays;
    if (int rc = load_corpus(cfg, plays); rc != 0) return rc;

    if (cfg.acts > 0) {
        std::vector<PerActCell> cells;
        try {
            cells = per_act_effect(plays, cfg.acts);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitEmptyCorpus;
        }
        io::atomic_write(fs::path(cfg.output_dir) / "per_act.csv", per_act_csv(cells));
        int selected = 0;
        for (const auto& cell : cells) {
            if (cell.act == 1) selected += cell.plays;
        }
        std::cout << "Per-act density effect over " << selected << " " << cfg.acts
                  << "-act plays written to per_act.csv.\n";
        return 0;
    }

    const auto effect = last_act_effect(plays);
    io::atomic_write(fs::path(cfg.output_dir) / "ablation.csv", ablation_csv(effect.records));
    io::atomic_write(fs::path(cfg.output_dir) / "ablation_summary.json",
                     ablation_summary_json(effect).dump(2) + "\n");
    std::cout << "Last-act ablation over " << effect.records.size() << " plays";
    if (!effect.skipped.empty()) std::cout << " (" << effect.skipped.size() << " skipped)";
    for (const auto& s : effect.by_genre) {
        std::cout << "; " << to_string(s.genre) << " mean delta " << s.mean_delta;
    }
    std::cout << ".\n";
    return 0;
}

int run_export_graph(const RunConfig& cfg) {
    std::vector<Play> plays;
    if (int rc = load_corpus(cfg, plays); rc != 0) return rc;
    const Play* play = nullptr;
    for (const auto& p : plays) {
        if (p.id == cfg.play_id) {
            play = &p;
            break;
        }
    }
    if (play == nullptr) {
        std::cerr << "error: unknown play id: " << cfg.play_id << "\n";
        return kExitUnknownPlay;
    }
    const auto g = build_graph(*play);
    io::atomic_write(fs::path(cfg.output_dir) / (cfg.play_id + ".gexf"), to_gexf(g));
    io::atomic_write(fs::path(cfg.output_dir) / (cfg.play_id + "_edges.csv"), to_edge_csv(g));
    std::cout << "Exported " << g.node_count() << " nodes / " << g.edge_count()
              << " edges for " << cfg.play_id << ".\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Character co-occurrence network analysis of dramatic corpora"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* ingest = app.add_subcommand("ingest", "Parse TEI files and apply corpus filters");
    add_common_flags(ingest, cfg);
    add_ingest_flags(ingest, cfg);

    auto* features = app.add_subcommand("features", "Per-play feature table");
    add_common_flags(features, cfg);

    auto* correlate = app.add_subcommand("correlate", "Correlation matrix and screen");
    add_common_flags(correlate, cfg);
    correlate->add_option("--threshold", cfg.correlation_threshold,
                          "Absolute correlation exclusion threshold");

    auto* test = app.add_subcommand("test", "Wilcoxon rank-sum genre tests");
    add_common_flags(test, cfg);

    auto* pca_cmd = app.add_subcommand("pca", "Principal component analysis");
    add_common_flags(pca_cmd, cfg);

    bool with_size = false;
    auto* classify = app.add_subcommand("classify", "Linear-SVM leave-one-out evaluation");
    add_common_flags(classify, cfg);
    classify->add_option("--svm-c", cfg.svm_C, "SVM regularization parameter");
    classify->add_flag("--with-size", with_size, "Add character count as a feature");

    auto* rfe_cmd = app.add_subcommand("rfe", "Recursive feature elimination");
    add_common_flags(rfe_cmd, cfg);
    rfe_cmd->add_option("--svm-c", cfg.svm_C, "SVM regularization parameter");

    auto* ablate = app.add_subcommand("ablate", "Act-withheld density analysis");
    add_common_flags(ablate, cfg);
    ablate->add_option("--acts", cfg.acts,
                       "Restrict to plays with exactly this many acts (per-act table)");

    auto* export_graph = app.add_subcommand("export-graph", "GEXF and edge-list export");
    add_common_flags(export_graph, cfg);
    export_graph->add_option("--play-id", cfg.play_id, "Play to export")->required();

    CLI11_PARSE(app, argc, argv);
    apply_parallelism(cfg);

    try {
        if (ingest->parsed()) return run_ingest(cfg);
        if (features->parsed()) return run_features(cfg);
        if (correlate->parsed()) return run_correlate(cfg);
        if (test->parsed()) return run_test(cfg);
        if (pca_cmd->parsed()) return run_pca(cfg);
        if (classify->parsed()) return run_classify(cfg, with_size);
        if (rfe_cmd->parsed()) return run_rfe(cfg);
        if (ablate->parsed()) return run_ablate(cfg);
        if (export_graph->parsed()) return run_export_graph(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
