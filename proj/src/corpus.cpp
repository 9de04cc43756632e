#include "drama/corpus.hpp"

#include <omp.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "drama/io.hpp"
#include "drama/tei.hpp"

namespace drama {
namespace {

std::string ascii_lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool is_comedy_label(const std::string& lower) {
    return lower == "comedy" || lower == "lustspiel" || lower == "komödie" ||
           lower == "komoedie" || lower == "comédie" || lower == "comedie";
}

bool is_tragedy_label(const std::string& lower) {
    return lower == "tragedy" || lower == "tragödie" || lower == "tragoedie" ||
           lower == "trauerspiel" || lower == "tragédie" || lower == "tragedie";
}

bool is_history_label(const std::string& lower) {
    return lower == "history" || lower == "histories" || lower == "history play" ||
           lower == "historie";
}

}  // namespace

Genre normalize_genre(const std::string& raw_genre, bool history_as_tragedy) {
    const std::string lower = ascii_lower(raw_genre);
    if (is_comedy_label(lower)) return Genre::Comedy;
    if (is_tragedy_label(lower)) return Genre::Tragedy;
    if (is_history_label(lower)) return history_as_tragedy ? Genre::Tragedy : Genre::Other;
    return Genre::Other;
}

std::vector<Play> filter_corpus(const std::vector<Play>& plays, int min_characters,
                                int min_scenes) {
    std::vector<Play> kept;
    for (const auto& play : plays) {
        if (play.genre == Genre::Other) continue;
        if (static_cast<int>(play.characters.size()) <= min_characters) continue;
        if (static_cast<int>(play.scenes.size()) <= min_scenes) continue;
        kept.push_back(play);
    }
    return kept;
}

std::map<std::string, std::string> read_manifest(const std::filesystem::path& csv_path) {
    std::map<std::string, std::string> overrides;
    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error("cannot open manifest: " + csv_path.string());
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) continue;
        std::string id = line.substr(0, comma);
        std::string genre = line.substr(comma + 1);
        if (first && id == "play_id") {
            first = false;
            continue;
        }
        first = false;
        overrides[id] = genre;
    }
    return overrides;
}

std::vector<Play> ingest_directory(const std::filesystem::path& dir, const IngestOptions& opts,
                                   IngestSummary& summary) {
    namespace fs = std::filesystem;

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".xml") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    struct Slot {
        Play play;
        bool ok = false;
        std::string error;
        std::vector<std::string> warnings;
    };
    std::vector<Slot> slots(files.size());

#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < files.size(); ++i) {
        try {
            const std::string bytes = io::read_file(files[i]);
            slots[i].play = parse_tei(bytes, &slots[i].warnings);
            if (slots[i].play.id.empty()) slots[i].play.id = files[i].stem().string();
            slots[i].ok = true;
        } catch (const std::exception& e) {
            slots[i].error = files[i].filename().string() + ": " + e.what();
        }
    }

    std::map<std::string, std::string> overrides;
    if (!opts.manifest.empty()) overrides = read_manifest(opts.manifest);

    std::vector<Play> parsed;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        auto& slot = slots[i];
        if (!slot.ok) {
            summary.failed_files.push_back(slot.error);
            ++summary.drop_reasons["parse_failure"];
            continue;
        }
        ++summary.parsed;
        for (auto& w : slot.warnings) {
            summary.warnings.push_back(slot.play.id + ": " + w);
        }
        if (auto it = overrides.find(slot.play.id); it != overrides.end()) {
            slot.play.raw_genre = it->second;
        }
        slot.play.genre = normalize_genre(slot.play.raw_genre, opts.history_as_tragedy);
        parsed.push_back(std::move(slot.play));
    }

    std::vector<Play> kept;
    for (auto& play : parsed) {
        if (play.genre == Genre::Other) {
            ++summary.drop_reasons["no_binary_genre"];
        } else if (static_cast<int>(play.characters.size()) <= opts.min_characters) {
            ++summary.drop_reasons["too_few_characters"];
        } else if (static_cast<int>(play.scenes.size()) <= opts.min_scenes) {
            ++summary.drop_reasons["too_few_scenes"];
        } else {
            kept.push_back(std::move(play));
        }
    }
    summary.kept = static_cast<int>(kept.size());
    return kept;
}

nlohmann::json corpus_to_json(const std::vector<Play>& plays) {
    nlohmann::json j;
    j["format"] = "drama-corpus";
    j["version"] = 1;
    j["plays"] = plays;
    return j;
}

std::vector<Play> corpus_from_json(const nlohmann::json& j) {
    if (!j.contains("plays")) throw std::runtime_error("not a corpus file: missing 'plays'");
    return j.at("plays").get<std::vector<Play>>();
}

void write_corpus(const std::filesystem::path& path, const std::vector<Play>& plays) {
    io::atomic_write(path, corpus_to_json(plays).dump(2) + "\n");
}

std::vector<Play> read_corpus(const std::filesystem::path& path) {
    return corpus_from_json(nlohmann::json::parse(io::read_file(path)));
}

}  // namespace drama
