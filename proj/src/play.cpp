#include "drama/play.hpp"

#include <algorithm>
#include <stdexcept>

namespace drama {

std::string to_string(Genre g) {
    switch (g) {
        case Genre::Comedy: return "comedy";
        case Genre::Tragedy: return "tragedy";
        case Genre::Other: return "other";
    }
    throw std::logic_error("unreachable genre value");
}

Genre genre_from_string(const std::string& s) {
    if (s == "comedy") return Genre::Comedy;
    if (s == "tragedy") return Genre::Tragedy;
    if (s == "other") return Genre::Other;
    throw std::invalid_argument("unknown genre string: " + s);
}

bool Play::has_character(const std::string& char_id) const {
    return find_character(char_id) != nullptr;
}

const CharacterRecord* Play::find_character(const std::string& char_id) const {
    auto it = std::find_if(characters.begin(), characters.end(),
                           [&](const CharacterRecord& c) { return c.id == char_id; });
    return it == characters.end() ? nullptr : &*it;
}

void to_json(nlohmann::json& j, const CharacterRecord& c) {
    j = nlohmann::json{{"id", c.id}, {"name", c.name}, {"is_group", c.is_group}};
}

void from_json(const nlohmann::json& j, CharacterRecord& c) {
    j.at("id").get_to(c.id);
    j.at("name").get_to(c.name);
    j.at("is_group").get_to(c.is_group);
}

void to_json(nlohmann::json& j, const SpeechAct& s) {
    j = nlohmann::json{{"speaker_id", s.speaker_id}, {"word_count", s.word_count}};
}

void from_json(const nlohmann::json& j, SpeechAct& s) {
    j.at("speaker_id").get_to(s.speaker_id);
    j.at("word_count").get_to(s.word_count);
}

void to_json(nlohmann::json& j, const Scene& s) {
    j = nlohmann::json{{"act", s.act_index},
                       {"scene", s.scene_index},
                       {"present_ids", s.present_ids},
                       {"speeches", s.speeches}};
}

void from_json(const nlohmann::json& j, Scene& s) {
    j.at("act").get_to(s.act_index);
    j.at("scene").get_to(s.scene_index);
    j.at("present_ids").get_to(s.present_ids);
    j.at("speeches").get_to(s.speeches);
}

void to_json(nlohmann::json& j, const Play& p) {
    j = nlohmann::json{{"id", p.id},
                       {"title", p.title},
                       {"author", p.author},
                       {"raw_genre", p.raw_genre},
                       {"genre", to_string(p.genre)},
                       {"characters", p.characters},
                       {"scenes", p.scenes},
                       {"act_count", p.act_count}};
}

void from_json(const nlohmann::json& j, Play& p) {
    j.at("id").get_to(p.id);
    j.at("title").get_to(p.title);
    j.at("author").get_to(p.author);
    j.at("raw_genre").get_to(p.raw_genre);
    p.genre = genre_from_string(j.at("genre").get<std::string>());
    j.at("characters").get_to(p.characters);
    j.at("scenes").get_to(p.scenes);
    j.at("act_count").get_to(p.act_count);
}

}  // namespace drama
