#pragma once

// Shared fixtures: TEI snippets, hand-built plays, and the synthetic corpus
// with planted genre structure.

#include <random>
#include <string>
#include <vector>

#include "drama/graph.hpp"
#include "drama/play.hpp"

namespace fixtures {

// --- TEI snippets ----------------------------------------------------------

// 1 act, 2 scenes, 3 characters, 5 speeches. Word counts by hand:
//   scene 1: anna 3+2 words, berta 4; scene 2: carl 5, anna 1
inline const char* kMinimalTei = R"(<?xml version="1.0" encoding="UTF-8"?>
<TEI xmlns="http://www.tei-c.org/ns/1.0" xml:id="test001">
  <teiHeader>
    <fileDesc>
      <titleStmt>
        <title>A Minimal Play</title>
        <author>Nobody Particular</author>
      </titleStmt>
    </fileDesc>
    <profileDesc>
      <particDesc>
        <listPerson>
          <person xml:id="anna"><persName>Anna</persName></person>
          <person xml:id="berta"><persName>Berta</persName></person>
          <person xml:id="carl"><persName>Carl</persName></person>
        </listPerson>
      </particDesc>
      <textClass>
        <keywords><term type="genreTitle">Comedy</term></keywords>
      </textClass>
    </profileDesc>
  </teiHeader>
  <text>
    <body>
      <div type="act">
        <div type="scene">
          <sp who="#anna"><speaker>ANNA.</speaker><l>Good morning dear</l></sp>
          <sp who="#berta"><speaker>BERTA.</speaker><l>Good morning to you</l></sp>
          <sp who="#anna"><speaker>ANNA.</speaker><l>Lovely weather</l></sp>
        </div>
        <div type="scene">
          <sp who="#carl"><speaker>CARL.</speaker><l>Has anyone seen my hat</l></sp>
          <sp who="#anna"><speaker>ANNA.</speaker><l>No</l></sp>
        </div>
      </div>
    </body>
  </text>
</TEI>
)";

// scene 2 has a cast annotation but no speeches
inline const char* kSilentSceneTei = R"(<?xml version="1.0"?>
<TEI xml:id="test002">
  <teiHeader>
    <fileDesc><titleStmt><title>Silence</title><author>A.</author></titleStmt></fileDesc>
    <profileDesc>
      <particDesc><listPerson>
        <person xml:id="a"><persName>A</persName></person>
        <person xml:id="b"><persName>B</persName></person>
      </listPerson></particDesc>
    </profileDesc>
  </teiHeader>
  <text><body>
    <div type="act">
      <div type="scene">
        <sp who="#a"><l>One two three</l></sp>
      </div>
      <div type="scene">
        <stage who="#a #b">They stand in silence.</stage>
      </div>
    </div>
  </body></text>
</TEI>
)";

// speaker "ghost" is declared nowhere and missing from the scene cast
inline const char* kUndeclaredSpeakerTei = R"(<?xml version="1.0"?>
<TEI xml:id="test003">
  <teiHeader>
    <fileDesc><titleStmt><title>Ghost</title><author>B.</author></titleStmt></fileDesc>
    <profileDesc>
      <particDesc><listPerson>
        <person xml:id="hero"><persName>Hero</persName></person>
      </listPerson></particDesc>
    </profileDesc>
  </teiHeader>
  <text><body>
    <div type="act">
      <div type="scene">
        <sp who="#hero"><l>Who goes there</l></sp>
        <sp who="#ghost"><l>I do</l></sp>
      </div>
    </div>
  </body></text>
</TEI>
)";

// --- hand-built plays ------------------------------------------------------

inline drama::Scene make_scene(int act, int index, std::vector<std::string> cast,
                               std::vector<std::pair<std::string, std::size_t>> speeches = {}) {
    drama::Scene s;
    s.act_index = act;
    s.scene_index = index;
    s.present_ids.insert(cast.begin(), cast.end());
    for (auto& [who, words] : speeches) s.speeches.push_back({who, words});
    return s;
}

inline drama::Play make_play(std::string id, drama::Genre genre,
                             std::vector<std::string> character_ids,
                             std::vector<drama::Scene> scenes) {
    drama::Play p;
    p.id = std::move(id);
    p.title = p.id;
    p.author = "fixture";
    p.genre = genre;
    p.raw_genre = drama::to_string(genre);
    for (auto& cid : character_ids) p.characters.push_back({cid, cid, false});
    p.scenes = std::move(scenes);
    for (const auto& s : p.scenes) p.act_count = std::max(p.act_count, s.act_index);
    return p;
}

// --- synthetic corpus with planted genre structure -------------------------

// Comedies: dense ensemble scenes, a full-cast wedding finale, evenly spread
// speech. Tragedies: chain-linked subgroups mediated by one protagonist,
// monologue-heavy speech, a graveyard finale that brings in new mourners.
inline drama::Play synthetic_comedy(const std::string& id, std::mt19937& rng) {
    std::uniform_int_distribution<int> cast_size(9, 13);
    const int n = cast_size(rng);
    std::vector<std::string> cast;
    for (int i = 0; i < n; ++i) cast.push_back(id + "_c" + std::to_string(i));

    drama::Play p;
    std::vector<drama::Scene> scenes;
    std::uniform_int_distribution<int> scenes_per_act(2, 4);
    std::uniform_int_distribution<int> words(20, 80);
    for (int act = 1; act <= 5; ++act) {
        const int ns = scenes_per_act(rng);
        for (int s = 1; s <= ns; ++s) {
            // large random subset of the cast
            std::vector<std::string> present;
            for (const auto& c : cast) {
                if (std::uniform_real_distribution<>(0, 1)(rng) < 0.45) present.push_back(c);
            }
            if (present.size() < 3) present.assign(cast.begin(), cast.begin() + 3);
            std::vector<std::pair<std::string, std::size_t>> speeches;
            for (const auto& c : present) {
                for (int k = 0; k < 4; ++k) {
                    speeches.push_back({c, static_cast<std::size_t>(words(rng))});
                }
            }
            scenes.push_back(make_scene(act, s, present, speeches));
        }
    }
    // wedding: everyone on stage
    std::vector<std::pair<std::string, std::size_t>> finale_speech;
    for (const auto& c : cast) finale_speech.push_back({c, static_cast<std::size_t>(words(rng))});
    scenes.push_back(make_scene(5, 99, cast, finale_speech));
    return make_play(id, drama::Genre::Comedy, cast, scenes);
}

inline drama::Play synthetic_tragedy(const std::string& id, std::mt19937& rng) {
    std::uniform_int_distribution<int> group_count(3, 4);
    std::uniform_int_distribution<int> group_size(3, 4);
    const int groups = group_count(rng);
    std::vector<std::vector<std::string>> subgroup(groups);
    std::vector<std::string> cast;
    const std::string protagonist = id + "_hero";
    cast.push_back(protagonist);
    for (int g = 0; g < groups; ++g) {
        const int sz = group_size(rng);
        for (int i = 0; i < sz; ++i) {
            std::string cid = id + "_g" + std::to_string(g) + "_" + std::to_string(i);
            subgroup[g].push_back(cid);
            cast.push_back(cid);
        }
    }

    std::vector<drama::Scene> scenes;
    std::uniform_int_distribution<int> words_long(200, 500);
    std::uniform_int_distribution<int> words_short(3, 15);
    std::uniform_int_distribution<int> pick_group(0, groups - 1);
    for (int act = 1; act <= 5; ++act) {
        for (int s = 1; s <= 3; ++s) {
            // one subgroup, mediated by the protagonist
            const auto& grp = subgroup[pick_group(rng)];
            std::vector<std::string> present = grp;
            present.push_back(protagonist);
            std::vector<std::pair<std::string, std::size_t>> speeches;
            for (int k = 0; k < 5; ++k) {
                speeches.push_back({protagonist, static_cast<std::size_t>(words_long(rng))});
            }
            for (const auto& c : grp) {
                speeches.push_back({c, static_cast<std::size_t>(words_short(rng))});
            }
            scenes.push_back(make_scene(act, s, present, speeches));
        }
    }
    // graveyard: new mourners appear one by one with the protagonist
    std::uniform_int_distribution<int> mourners(2, 3);
    const int m = mourners(rng);
    for (int i = 0; i < m; ++i) {
        std::string mid = id + "_mourner" + std::to_string(i);
        cast.push_back(mid);
        scenes.push_back(make_scene(5, 90 + i, {protagonist, mid},
                                    {{protagonist, static_cast<std::size_t>(words_long(rng))},
                                     {mid, static_cast<std::size_t>(words_short(rng))}}));
    }
    return make_play(id, drama::Genre::Tragedy, cast, scenes);
}

inline std::vector<drama::Play> synthetic_corpus(int comedies, int tragedies,
                                                 unsigned seed = 42) {
    std::mt19937 rng(seed);
    std::vector<drama::Play> plays;
    for (int i = 0; i < comedies; ++i) {
        plays.push_back(synthetic_comedy("com" + std::to_string(i), rng));
    }
    for (int i = 0; i < tragedies; ++i) {
        plays.push_back(synthetic_tragedy("tra" + std::to_string(i), rng));
    }
    return plays;
}

// --- random graphs ---------------------------------------------------------

inline drama::CharacterGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                              const std::vector<int>& weights = {}) {
    drama::CharacterGraph g;
    for (int i = 0; i < n; ++i) g.node_ids.push_back("n" + std::to_string(100 + i));
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto [a, b] = edges[k];
        if (a > b) std::swap(a, b);
        g.edges[{a, b}] = weights.empty() ? 1 : weights[k];
    }
    return g;
}

inline drama::CharacterGraph random_connected_graph(std::mt19937& rng, int max_n = 8) {
    std::uniform_int_distribution<int> nodes(2, max_n);
    const int n = nodes(rng);
    std::vector<std::pair<int, int>> edges;
    // random spanning tree keeps it connected
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.push_back({parent(rng), v});
    }
    std::uniform_real_distribution<> coin(0, 1);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (coin(rng) < 0.3 &&
                std::find(edges.begin(), edges.end(), std::make_pair(a, b)) == edges.end()) {
                edges.push_back({a, b});
            }
        }
    }
    std::vector<int> weights;
    std::uniform_int_distribution<int> w(1, 4);
    for (std::size_t k = 0; k < edges.size(); ++k) weights.push_back(w(rng));
    return graph_from_edges(n, edges, weights);
}

}  // namespace fixtures
