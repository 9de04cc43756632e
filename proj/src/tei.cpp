#include "drama/tei.hpp"

#include <expat.h>

#include <algorithm>
#include <cstring>
#include <map>
#include <sstream>

namespace drama {
namespace {

std::string local_name(const char* raw) {
    if (raw == nullptr) return {};
    std::string name(raw);
    const auto pos = name.find(':');
    return pos == std::string::npos ? name : name.substr(pos + 1);
}

const char* find_attr(const char** atts, const char* wanted) {
    for (int i = 0; atts[i] != nullptr; i += 2) {
        if (local_name(atts[i]) == wanted) return atts[i + 1];
    }
    return nullptr;
}

bool is_space_byte(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Whitespace-delimited tokens; treats U+00A0 as a separator too.
std::size_t count_tokens(const std::string& text) {
    std::size_t count = 0;
    bool in_token = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        bool sep = is_space_byte(c);
        if (!sep && c == 0xC2 && i + 1 < text.size() &&
            static_cast<unsigned char>(text[i + 1]) == 0xA0) {
            sep = true;
            ++i;
        }
        if (sep) {
            in_token = false;
        } else if (!in_token) {
            in_token = true;
            ++count;
        }
    }
    return count;
}

// who="#a #b" -> {"a", "b"}
std::vector<std::string> split_refs(const std::string& who) {
    std::vector<std::string> ids;
    std::istringstream in(who);
    std::string tok;
    while (in >> tok) {
        if (!tok.empty() && tok.front() == '#') tok.erase(tok.begin());
        if (!tok.empty()) ids.push_back(tok);
    }
    return ids;
}

struct ParserState {
    Play play;
    std::vector<std::string> warnings;

    bool in_header = false;
    bool in_title_stmt = false;
    bool in_title = false;
    bool in_author = false;
    bool in_genre_term = false;
    std::string title_buf;
    std::string author_buf;
    std::string genre_buf;

    // character declaration
    int person_depth = -1;
    CharacterRecord current_person;
    bool in_person_name = false;
    std::string person_name_buf;

    int act_counter = 0;
    int scene_counter_in_act = 0;
    bool scene_open = false;
    int scene_depth = -1;
    Scene current_scene;

    bool in_sp = false;
    std::vector<std::string> sp_speakers;
    std::string sp_text;
    int sp_skip_depth = 0;  // inside speaker/stage/note within a sp

    int depth = 0;
};

void start_element(void* user, const char* raw_name, const char** atts) {
    auto& st = *static_cast<ParserState*>(user);
    const std::string name = local_name(raw_name);
    ++st.depth;

    if (st.depth == 1) {
        if (const char* id = find_attr(atts, "id")) st.play.id = id;
    }

    if (name == "teiHeader") st.in_header = true;

    if (st.in_header) {
        if (name == "titleStmt") st.in_title_stmt = true;
        if (st.in_title_stmt && name == "title" && st.title_buf.empty()) st.in_title = true;
        if (st.in_title_stmt && name == "author" && st.author_buf.empty()) st.in_author = true;
        if (name == "term" && st.genre_buf.empty()) {
            const char* type = find_attr(atts, "type");
            if (type != nullptr && std::string(type).find("genre") != std::string::npos) {
                st.in_genre_term = true;
            }
        }
    }

    if (name == "person" || name == "personGrp") {
        st.person_depth = st.depth;
        st.current_person = CharacterRecord{};
        st.current_person.is_group = (name == "personGrp");
        if (const char* id = find_attr(atts, "id")) st.current_person.id = id;
    }
    if (st.person_depth > 0 && (name == "persName" || name == "name") &&
        st.current_person.name.empty()) {
        st.in_person_name = true;
        st.person_name_buf.clear();
    }

    if (name == "div") {
        const char* type = find_attr(atts, "type");
        if (type != nullptr && std::strcmp(type, "act") == 0) {
            ++st.act_counter;
            st.scene_counter_in_act = 0;
        } else if (type != nullptr && std::strcmp(type, "scene") == 0 && !st.scene_open) {
            st.scene_open = true;
            st.scene_depth = st.depth;
            st.current_scene = Scene{};
            st.current_scene.act_index = std::max(st.act_counter, 1);
            st.current_scene.scene_index = ++st.scene_counter_in_act;
        }
    }

    if (st.scene_open && !st.in_sp && name == "sp") {
        st.in_sp = true;
        st.sp_text.clear();
        st.sp_speakers.clear();
        if (const char* who = find_attr(atts, "who")) st.sp_speakers = split_refs(who);
        return;
    }

    if (st.in_sp) {
        if (st.sp_skip_depth > 0 || name == "speaker" || name == "stage" || name == "note") {
            ++st.sp_skip_depth;
        } else {
            st.sp_text.push_back(' ');  // element boundary separates tokens
        }
        return;
    }

    // annotated scene cast outside speeches
    if (st.scene_open && name == "stage") {
        if (const char* who = find_attr(atts, "who")) {
            for (auto& id : split_refs(who)) st.current_scene.present_ids.insert(id);
        }
    }
}

void end_element(void* user, const char* raw_name) {
    auto& st = *static_cast<ParserState*>(user);
    const std::string name = local_name(raw_name);

    if (st.in_sp) {
        if (st.sp_skip_depth > 0) {
            --st.sp_skip_depth;
        } else if (name == "sp") {
            st.in_sp = false;
            if (st.sp_speakers.empty()) {
                st.warnings.push_back("speech without speaker reference ignored");
            } else {
                // words go to the leading speaker; every referenced id is on stage
                SpeechAct act;
                act.speaker_id = st.sp_speakers.front();
                act.word_count = count_tokens(st.sp_text);
                st.current_scene.speeches.push_back(std::move(act));
                for (auto& id : st.sp_speakers) st.current_scene.present_ids.insert(id);
            }
        } else {
            st.sp_text.push_back(' ');
        }
        --st.depth;
        return;
    }

    if (name == "div" && st.scene_open && st.depth == st.scene_depth) {
        st.scene_open = false;
        st.scene_depth = -1;
        if (st.current_scene.present_ids.empty()) {
            st.warnings.push_back("scene with no characters dropped (act " +
                                  std::to_string(st.current_scene.act_index) + ")");
        } else {
            st.play.scenes.push_back(std::move(st.current_scene));
        }
    }

    if (st.person_depth == st.depth && (name == "person" || name == "personGrp")) {
        if (!st.current_person.id.empty()) {
            st.current_person.name = st.person_name_buf;
            st.play.characters.push_back(st.current_person);
        }
        st.person_depth = -1;
        st.person_name_buf.clear();
    }
    if (name == "persName" || name == "name") st.in_person_name = false;

    if (name == "title") st.in_title = false;
    if (name == "author") st.in_author = false;
    if (name == "term") st.in_genre_term = false;
    if (name == "titleStmt") st.in_title_stmt = false;
    if (name == "teiHeader") st.in_header = false;

    --st.depth;
}

void char_data(void* user, const char* data, int len) {
    auto& st = *static_cast<ParserState*>(user);
    std::string_view text(data, static_cast<std::size_t>(len));
    if (st.in_sp && st.sp_skip_depth == 0) st.sp_text.append(text);
    if (st.in_title) st.title_buf.append(text);
    if (st.in_author) st.author_buf.append(text);
    if (st.in_genre_term) st.genre_buf.append(text);
    if (st.in_person_name) st.person_name_buf.append(text);
}

std::string trimmed(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    auto end = s.find_last_not_of(" \t\r\n");
    std::string out = s.substr(begin, end - begin + 1);
    // collapse internal runs
    std::string collapsed;
    bool in_space = false;
    for (char c : out) {
        if (is_space_byte(static_cast<unsigned char>(c))) {
            if (!in_space) collapsed.push_back(' ');
            in_space = true;
        } else {
            collapsed.push_back(c);
            in_space = false;
        }
    }
    return collapsed;
}

}  // namespace

Play parse_tei(std::string_view xml_bytes, std::vector<std::string>* warnings) {
    ParserState st;

    XML_Parser parser = XML_ParserCreate(nullptr);
    if (parser == nullptr) throw std::runtime_error("could not allocate XML parser");
    XML_SetUserData(parser, &st);
    XML_SetElementHandler(parser, start_element, end_element);
    XML_SetCharacterDataHandler(parser, char_data);

    const auto status = XML_Parse(parser, xml_bytes.data(),
                                  static_cast<int>(xml_bytes.size()), /*isFinal=*/1);
    if (status != XML_STATUS_OK) {
        const long offset = static_cast<long>(XML_GetCurrentByteIndex(parser));
        std::string what = "XML parse error at byte ";
        what += std::to_string(offset);
        what += ": ";
        what += XML_ErrorString(XML_GetErrorCode(parser));
        XML_ParserFree(parser);
        throw TeiParseError(what, offset);
    }
    XML_ParserFree(parser);

    if (st.play.scenes.empty()) {
        throw TeiStructureError("no scene divisions found");
    }

    st.play.title = trimmed(st.title_buf);
    st.play.author = trimmed(st.author_buf);
    st.play.raw_genre = trimmed(st.genre_buf);

    // synthesize characters referenced in scenes but missing from the declaration
    for (const auto& scene : st.play.scenes) {
        for (const auto& id : scene.present_ids) {
            if (!st.play.has_character(id)) {
                st.warnings.push_back("undeclared character '" + id + "' synthesized");
                st.play.characters.push_back(CharacterRecord{id, id, false});
            }
        }
    }

    st.play.act_count = 0;
    for (const auto& scene : st.play.scenes) {
        st.play.act_count = std::max(st.play.act_count, scene.act_index);
    }

    if (warnings != nullptr) *warnings = std::move(st.warnings);
    return std::move(st.play);
}

}  // namespace drama
