#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace drama {

enum class Genre { Comedy, Tragedy, Other };

std::string to_string(Genre g);
Genre genre_from_string(const std::string& s);

struct CharacterRecord {
    std::string id;
    std::string name;
    bool is_group = false;
    bool operator==(const CharacterRecord&) const = default;
};

struct SpeechAct {
    std::string speaker_id;
    std::size_t word_count = 0;
    bool operator==(const SpeechAct&) const = default;
};

struct Scene {
    int act_index = 1;
    int scene_index = 1;
    std::set<std::string> present_ids;
    std::vector<SpeechAct> speeches;
    bool operator==(const Scene&) const = default;
};

/// One parsed drama: character registry plus the ordered act/scene structure
/// with per-speech word counts.
struct Play {
    std::string id;
    std::string title;
    std::string author;
    std::string raw_genre;
    Genre genre = Genre::Other;
    std::vector<CharacterRecord> characters;
    std::vector<Scene> scenes;
    int act_count = 0;

    bool has_character(const std::string& char_id) const;
    const CharacterRecord* find_character(const std::string& char_id) const;
    bool operator==(const Play&) const = default;
};

void to_json(nlohmann::json& j, const CharacterRecord& c);
void from_json(const nlohmann::json& j, CharacterRecord& c);
void to_json(nlohmann::json& j, const SpeechAct& s);
void from_json(const nlohmann::json& j, SpeechAct& s);
void to_json(nlohmann::json& j, const Scene& s);
void from_json(const nlohmann::json& j, Scene& s);
void to_json(nlohmann::json& j, const Play& p);
void from_json(const nlohmann::json& j, Play& p);

}  // namespace drama
