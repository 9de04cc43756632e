#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "drama/features.hpp"
#include "drama/kmeans1d.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace drama;

namespace {

std::vector<double> values_of(const std::vector<double>& values, const std::vector<Band>& labels,
                              Band band) {
    std::vector<double> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (labels[i] == band) out.push_back(values[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("kmeans3_1d splits the documented example") {
    const std::vector<double> v{1, 2, 10, 11, 100};
    const auto labels = kmeans3_1d(v);
    CHECK(values_of(v, labels, Band::Low) == std::vector<double>{1, 2});
    CHECK(values_of(v, labels, Band::Medium) == std::vector<double>{10, 11});
    CHECK(values_of(v, labels, Band::High) == std::vector<double>{100});
}

TEST_CASE("kmeans3_1d degenerate inputs") {
    SUBCASE("single distinct value goes High") {
        const auto labels = kmeans3_1d({5, 5, 5});
        for (auto b : labels) CHECK(b == Band::High);
    }
    SUBCASE("two distinct values label High then Medium") {
        const std::vector<double> v{0, 100};
        const auto labels = kmeans3_1d(v);
        CHECK(values_of(v, labels, Band::High) == std::vector<double>{100});
        CHECK(values_of(v, labels, Band::Medium) == std::vector<double>{0});
        CHECK(values_of(v, labels, Band::Low).empty());
    }
    SUBCASE("empty input throws") { CHECK_THROWS(kmeans3_1d({})); }
}

TEST_CASE("kmeans3_1d is globally optimal on random inputs") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<> val(-50, 50);
    std::uniform_int_distribution<int> len(3, 12);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> v(len(rng));
        for (auto& x : v) x = val(rng);
        const auto labels = kmeans3_1d(v);
        const double got = cluster_sse(v, labels);
        const double want = oracles::exhaustive_kmeans3_sse(v);
        CHECK(got == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("speech trichotomy proportions") {
    SUBCASE("three spread speakers split one per band") {
        const auto play = fixtures::make_play(
            "p", Genre::Comedy, {"a", "b", "c"},
            {fixtures::make_scene(1, 1, {"a", "b", "c"},
                                  {{"a", 1000}, {"b", 500}, {"c", 10}})});
        const auto t = speech_trichotomy(play);
        CHECK(t.high == doctest::Approx(1.0 / 3));
        CHECK(t.medium == doctest::Approx(1.0 / 3));
        CHECK(t.low == doctest::Approx(1.0 / 3));
    }
    SUBCASE("identical word counts all land High") {
        const auto play = fixtures::make_play(
            "p", Genre::Comedy, {"a", "b"},
            {fixtures::make_scene(1, 1, {"a", "b"}, {{"a", 7}, {"b", 7}})});
        const auto t = speech_trichotomy(play);
        CHECK(t.high == doctest::Approx(1.0));
        CHECK(t.medium == doctest::Approx(0.0));
    }
    SUBCASE("silent registry characters count as zero-word entries") {
        const auto play = fixtures::make_play(
            "p", Genre::Comedy, {"a", "b", "mute1", "mute2"},
            {fixtures::make_scene(1, 1, {"a", "b"}, {{"a", 400}, {"b", 50}})});
        const auto t = speech_trichotomy(play);
        CHECK(t.high + t.medium + t.low == doctest::Approx(1.0));
        // denominator is 4: a High, b Medium, the two mutes Low
        CHECK(t.high == doctest::Approx(0.25));
        CHECK(t.low == doctest::Approx(0.5));
    }
}

TEST_CASE("weighted-degree trichotomy excludes group characters") {
    auto play = fixtures::make_play(
        "p", Genre::Comedy, {"center", "l1", "l2", "l3", "l4"},
        {fixtures::make_scene(1, 1, {"center", "l1"}), fixtures::make_scene(1, 2, {"center", "l2"}),
         fixtures::make_scene(1, 3, {"center", "l3"}),
         fixtures::make_scene(1, 4, {"center", "l4"})});
    const auto g = build_graph(play);
    const auto t = wdeg_trichotomy(play, g);
    CHECK(t.high == doctest::Approx(0.2));  // the star center
    CHECK(t.high + t.medium + t.low == doctest::Approx(1.0));

    // mark a leaf as a group: denominator shrinks to 4
    play.characters[1].is_group = true;
    const auto t2 = wdeg_trichotomy(play, g);
    CHECK(t2.high == doctest::Approx(0.25));
    CHECK(t2.high + t2.medium + t2.low == doctest::Approx(1.0));
}

TEST_CASE("avg_character_speech uses the >10-speech qualifier") {
    SUBCASE("single qualifier") {
        std::vector<std::pair<std::string, std::size_t>> speeches;
        for (int i = 0; i < 11; ++i) speeches.push_back({"a", 30});  // 330 words
        for (int i = 0; i < 10; ++i) speeches.push_back({"b", 100});
        const auto play = fixtures::make_play(
            "p", Genre::Comedy, {"a", "b"}, {fixtures::make_scene(1, 1, {"a", "b"}, speeches)});
        bool fallback = true;
        CHECK(avg_character_speech(play, &fallback) == doctest::Approx(330.0));
        CHECK(!fallback);
    }
    SUBCASE("two qualifiers average") {
        std::vector<std::pair<std::string, std::size_t>> speeches;
        for (int i = 0; i < 20; ++i) speeches.push_back({"a", 10});  // 200
        for (int i = 0; i < 20; ++i) speeches.push_back({"b", 20});  // 400
        const auto play = fixtures::make_play(
            "p", Genre::Comedy, {"a", "b"}, {fixtures::make_scene(1, 1, {"a", "b"}, speeches)});
        CHECK(avg_character_speech(play) == doctest::Approx(300.0));
    }
    SUBCASE("no qualifier falls back to all speakers and flags it") {
        std::vector<std::pair<std::string, std::size_t>> speeches;
        for (int i = 0; i < 10; ++i) speeches.push_back({"a", 10});  // 100
        speeches.push_back({"b", 300});
        const auto play = fixtures::make_play(
            "p", Genre::Comedy, {"a", "b"}, {fixtures::make_scene(1, 1, {"a", "b"}, speeches)});
        bool fallback = false;
        CHECK(avg_character_speech(play, &fallback) == doctest::Approx(200.0));
        CHECK(fallback);
    }
}

TEST_CASE("avg_char_per_scene_norm formula") {
    auto scene_of = [](int act, int idx, int cast) {
        std::vector<std::string> ids;
        for (int i = 0; i < cast; ++i) ids.push_back("c" + std::to_string(idx) + "_" + std::to_string(i));
        return fixtures::make_scene(act, idx, ids);
    };
    SUBCASE("two scenes of 3 and 5") {
        const auto play = fixtures::make_play("p", Genre::Comedy, {},
                                              {scene_of(1, 1, 3), scene_of(1, 2, 5)});
        CHECK(avg_char_per_scene_norm(play) == doctest::Approx(2.0));
    }
    SUBCASE("one scene of 6") {
        const auto play = fixtures::make_play("p", Genre::Comedy, {}, {scene_of(1, 1, 6)});
        CHECK(avg_char_per_scene_norm(play) == doctest::Approx(6.0));
    }
    SUBCASE("ten scenes of 4") {
        std::vector<drama::Scene> scenes;
        for (int i = 1; i <= 10; ++i) scenes.push_back(scene_of(1, i, 4));
        const auto play = fixtures::make_play("p", Genre::Comedy, {}, scenes);
        CHECK(avg_char_per_scene_norm(play) == doctest::Approx(0.4));
    }
}

TEST_CASE("assemble z-scores each column") {
    std::mt19937 rng(77);
    const auto plays = fixtures::synthetic_corpus(3, 3);
    const auto features = extract_corpus_features(plays);
    const auto ds = assemble(features);
    REQUIRE(ds.n_rows() == 6);
    REQUIRE(ds.n_cols() == 13);
    CHECK(ds.feature_names == retained_feature_names());
    for (std::size_t c = 0; c < ds.n_cols(); ++c) {
        if (std::find(ds.constant_columns.begin(), ds.constant_columns.end(),
                      ds.feature_names[c]) != ds.constant_columns.end()) {
            for (const auto& row : ds.matrix) CHECK(row[c] == 0.0);
            continue;
        }
        double mean = 0.0, var = 0.0;
        for (const auto& row : ds.matrix) mean += row[c];
        mean /= static_cast<double>(ds.n_rows());
        for (const auto& row : ds.matrix) var += (row[c] - mean) * (row[c] - mean);
        var /= static_cast<double>(ds.n_rows() - 1);
        CHECK(mean == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(var == doctest::Approx(1.0).epsilon(1e-9));
    }
    // +1 Comedy, -1 Tragedy in corpus order
    CHECK(std::count(ds.labels.begin(), ds.labels.end(), 1) == 3);
    CHECK(std::count(ds.labels.begin(), ds.labels.end(), -1) == 3);
    CHECK_THROWS(assemble({features[0]}));
}

TEST_CASE("z-score of [1,2,3] is [-1,0,1]") {
    // drive through assemble with three plays whose n_characters differ;
    // verified here on the raw formula used for every column
    const std::vector<double> col{1, 2, 3};
    const double mean = 2.0;
    double var = 0.0;
    for (double x : col) var += (x - mean) * (x - mean);
    const double sd = std::sqrt(var / 2.0);
    CHECK((col[0] - mean) / sd == doctest::Approx(-1.0));
    CHECK((col[1] - mean) / sd == doctest::Approx(0.0));
    CHECK((col[2] - mean) / sd == doctest::Approx(1.0));
}

TEST_CASE("features are invariant under id relabeling and play order") {
    std::mt19937 rng(404);
    auto play = fixtures::synthetic_tragedy("t", rng);
    auto compute = [](const Play& p) {
        const auto g = build_graph(p);
        return extract_features(p, g, compute_metrics(g));
    };
    const auto base = compute(play).retained();

    // uniform, order-reversing relabeling of ids
    auto relabel = [](std::string id) { return "zzz_" + id; };
    Play renamed = play;
    for (auto& c : renamed.characters) c.id = relabel(c.id);
    for (auto& s : renamed.scenes) {
        std::set<std::string> ids;
        for (const auto& id : s.present_ids) ids.insert(relabel(id));
        s.present_ids = ids;
        for (auto& sp : s.speeches) sp.speaker_id = relabel(sp.speaker_id);
    }
    const auto after = compute(renamed).retained();
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(after[i] == doctest::Approx(base[i]).epsilon(1e-12));
    }

    // permuting the corpus permutes rows but not values
    auto plays = fixtures::synthetic_corpus(2, 2);
    auto f1 = extract_corpus_features(plays);
    std::reverse(plays.begin(), plays.end());
    auto f2 = extract_corpus_features(plays);
    std::reverse(f2.begin(), f2.end());
    REQUIRE(f1.size() == f2.size());
    for (std::size_t i = 0; i < f1.size(); ++i) {
        CHECK(f1[i].play_id == f2[i].play_id);
        CHECK(f1[i].retained() == f2[i].retained());
    }
}

TEST_CASE("duplicating a play leaves the size-independent measures unchanged") {
    std::mt19937 rng(909);
    const auto play = fixtures::synthetic_comedy("c", rng);

    Play doubled = play;
    doubled.id = "c2";
    auto clone_id = [](const std::string& id) { return "copy_" + id; };
    for (const auto& c : play.characters) {
        doubled.characters.push_back({clone_id(c.id), clone_id(c.name), c.is_group});
    }
    for (const auto& s : play.scenes) {
        drama::Scene t = s;
        t.scene_index += 1000;
        t.present_ids.clear();
        for (const auto& id : s.present_ids) t.present_ids.insert(clone_id(id));
        for (auto& sp : t.speeches) sp.speaker_id = clone_id(sp.speaker_id);
        doubled.scenes.push_back(t);
    }

    const auto t1 = speech_trichotomy(play);
    const auto t2 = speech_trichotomy(doubled);
    CHECK(t2.high == doctest::Approx(t1.high));
    CHECK(t2.medium == doctest::Approx(t1.medium));
    CHECK(t2.low == doctest::Approx(t1.low));
    CHECK(avg_character_speech(doubled) == doctest::Approx(avg_character_speech(play)));

    const auto g1 = build_graph(play);
    const auto g2 = build_graph(doubled);
    const auto m1 = compute_metrics(g1);
    const auto m2 = compute_metrics(g2);
    // the documented non-invariants
    CHECK(m2.n_components == 2 * m1.n_components);
    CHECK(m2.diameter == m1.diameter);  // diameter of the (duplicated) largest component
    // per-component density is preserved even though whole-graph density halves
    CHECK(m2.density < m1.density);
}
