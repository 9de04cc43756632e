#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "drama/play.hpp"

namespace drama {

/// Case-insensitive mapping of raw genre labels onto the binary scheme.
/// History labels land in Tragedy only when history_as_tragedy is set.
Genre normalize_genre(const std::string& raw_genre, bool history_as_tragedy);

/// Keeps Comedy/Tragedy plays with strictly more than min_characters
/// characters and strictly more than min_scenes scenes. Order preserved.
std::vector<Play> filter_corpus(const std::vector<Play>& plays, int min_characters = 5,
                                int min_scenes = 2);

/// play_id -> raw genre label, from a `play_id,genre` CSV.
std::map<std::string, std::string> read_manifest(const std::filesystem::path& csv_path);

struct IngestOptions {
    int min_characters = 5;
    int min_scenes = 2;
    bool history_as_tragedy = true;
    std::filesystem::path manifest;  // optional genre override
};

struct IngestSummary {
    int parsed = 0;
    int kept = 0;
    std::map<std::string, int> drop_reasons;        // reason -> count
    std::vector<std::string> warnings;              // per-file parse warnings
    std::vector<std::string> failed_files;          // unparseable inputs
};

/// Parse every .xml file in a directory, normalize genres, apply the corpus
/// filters. Files are parsed in parallel; output order is the sorted file
/// name order.
std::vector<Play> ingest_directory(const std::filesystem::path& dir, const IngestOptions& opts,
                                   IngestSummary& summary);

nlohmann::json corpus_to_json(const std::vector<Play>& plays);
std::vector<Play> corpus_from_json(const nlohmann::json& j);
void write_corpus(const std::filesystem::path& path, const std::vector<Play>& plays);
std::vector<Play> read_corpus(const std::filesystem::path& path);

}  // namespace drama
