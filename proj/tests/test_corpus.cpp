#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "drama/corpus.hpp"
#include "drama/io.hpp"
#include "drama/tei.hpp"
#include "fixtures.hpp"

using namespace drama;
namespace fs = std::filesystem;

TEST_CASE("minimal TEI parses with hand-counted structure") {
    std::vector<std::string> warnings;
    const Play p = parse_tei(fixtures::kMinimalTei, &warnings);

    CHECK(p.id == "test001");
    CHECK(p.title == "A Minimal Play");
    CHECK(p.author == "Nobody Particular");
    CHECK(p.raw_genre == "Comedy");
    CHECK(p.characters.size() == 3);
    CHECK(p.act_count == 1);
    REQUIRE(p.scenes.size() == 2);
    CHECK(warnings.empty());

    const Scene& s1 = p.scenes[0];
    CHECK(s1.present_ids == std::set<std::string>{"anna", "berta"});
    REQUIRE(s1.speeches.size() == 3);
    CHECK(s1.speeches[0].speaker_id == "anna");
    CHECK(s1.speeches[0].word_count == 3);
    CHECK(s1.speeches[1].speaker_id == "berta");
    CHECK(s1.speeches[1].word_count == 4);
    CHECK(s1.speeches[2].word_count == 2);

    const Scene& s2 = p.scenes[1];
    CHECK(s2.present_ids == std::set<std::string>{"anna", "carl"});
    REQUIRE(s2.speeches.size() == 2);
    CHECK(s2.speeches[0].word_count == 5);
    CHECK(s2.speeches[1].word_count == 1);
}

TEST_CASE("stage cast annotation is honored in silent scenes") {
    std::vector<std::string> warnings;
    const Play p = parse_tei(fixtures::kSilentSceneTei, &warnings);
    REQUIRE(p.scenes.size() == 2);
    CHECK(p.scenes[1].present_ids == std::set<std::string>{"a", "b"});
    CHECK(p.scenes[1].speeches.empty());
}

TEST_CASE("undeclared speakers are synthesized with a warning") {
    std::vector<std::string> warnings;
    const Play p = parse_tei(fixtures::kUndeclaredSpeakerTei, &warnings);
    CHECK(p.has_character("ghost"));
    CHECK(p.find_character("ghost")->is_group == false);
    CHECK(!warnings.empty());
    CHECK(p.scenes[0].present_ids.count("ghost") == 1);
}

TEST_CASE("malformed XML reports a byte offset") {
    const std::string broken = "<TEI><text><body><div type=\"act\"><div type=\"scene\"";
    CHECK_THROWS_AS(parse_tei(broken), TeiParseError);
    try {
        parse_tei(broken);
    } catch (const TeiParseError& e) {
        CHECK(e.byte_offset >= 0);
    }
}

TEST_CASE("a play without scenes is a structure error") {
    const std::string no_scenes = R"(<TEI xml:id="x">
      <teiHeader><fileDesc><titleStmt><title>t</title></titleStmt></fileDesc></teiHeader>
      <text><body><p>prose only</p></body></text></TEI>)";
    CHECK_THROWS_AS(parse_tei(no_scenes), TeiStructureError);
}

TEST_CASE("genre normalization covers the label variants") {
    CHECK(normalize_genre("Comedy", false) == Genre::Comedy);
    CHECK(normalize_genre("LUSTSPIEL", false) == Genre::Comedy);
    CHECK(normalize_genre("Komödie", false) == Genre::Comedy);
    CHECK(normalize_genre("Tragedy", false) == Genre::Tragedy);
    CHECK(normalize_genre("Trauerspiel", false) == Genre::Tragedy);
    CHECK(normalize_genre("Tragödie", false) == Genre::Tragedy);
    CHECK(normalize_genre("history", false) == Genre::Other);
    CHECK(normalize_genre("history", true) == Genre::Tragedy);
    CHECK(normalize_genre("libretto", true) == Genre::Other);
}

TEST_CASE("corpus filter drops small or unlabeled plays and is idempotent") {
    auto plays = fixtures::synthetic_corpus(3, 3);
    // small comedy: exactly 5 characters (not strictly more)
    plays.push_back(fixtures::make_play(
        "tiny", Genre::Comedy, {"a", "b", "c", "d", "e"},
        {fixtures::make_scene(1, 1, {"a", "b"}), fixtures::make_scene(1, 2, {"c", "d"}),
         fixtures::make_scene(1, 3, {"e", "a"})}));
    // few scenes: exactly 2 (not strictly more)
    plays.push_back(fixtures::make_play(
        "short", Genre::Tragedy, {"a", "b", "c", "d", "e", "f"},
        {fixtures::make_scene(1, 1, {"a", "b"}), fixtures::make_scene(1, 2, {"c", "d"})}));
    // wrong genre
    std::mt19937 rng(1);
    auto other = fixtures::synthetic_comedy("oth", rng);
    other.genre = Genre::Other;
    plays.push_back(other);

    const auto kept = filter_corpus(plays);
    CHECK(kept.size() == 6);
    for (const auto& p : kept) {
        CHECK((p.genre == Genre::Comedy || p.genre == Genre::Tragedy));
    }
    CHECK(filter_corpus(kept).size() == kept.size());  // idempotent
    // order preserved
    CHECK(kept.front().id == "com0");
    CHECK(kept.back().id == "tra2");
}

TEST_CASE("play JSON round-trip is lossless") {
    std::mt19937 rng(99);
    for (int i = 0; i < 10; ++i) {
        const Play p = i % 2 ? fixtures::synthetic_tragedy("t" + std::to_string(i), rng)
                             : fixtures::synthetic_comedy("c" + std::to_string(i), rng);
        nlohmann::json j = p;
        const Play back = j.get<Play>();
        CHECK(back == p);
    }
}

TEST_CASE("corpus file round-trip is lossless") {
    const auto plays = fixtures::synthetic_corpus(2, 2);
    const fs::path path = fs::temp_directory_path() / "drama_corpus_rt.json";
    write_corpus(path, plays);
    const auto back = read_corpus(path);
    REQUIRE(back.size() == plays.size());
    for (std::size_t i = 0; i < plays.size(); ++i) CHECK(back[i] == plays[i]);
    fs::remove(path);
}

TEST_CASE("manifest CSV parses and overrides genres on ingest") {
    const fs::path dir = fs::temp_directory_path() / "drama_ingest_test";
    fs::create_directories(dir);
    {
        std::ofstream xml(dir / "play1.xml");
        xml << fixtures::kMinimalTei;
        std::ofstream csv(dir / "manifest.csv");
        csv << "play_id,genre\ntest001,Trauerspiel\n";
    }
    const auto manifest = read_manifest(dir / "manifest.csv");
    REQUIRE(manifest.count("test001") == 1);
    CHECK(manifest.at("test001") == "Trauerspiel");

    IngestOptions opts;
    opts.min_characters = 0;
    opts.min_scenes = 0;
    opts.manifest = dir / "manifest.csv";
    IngestSummary summary;
    const auto plays = ingest_directory(dir, opts, summary);
    CHECK(summary.parsed == 1);
    REQUIRE(plays.size() == 1);
    CHECK(plays[0].genre == Genre::Tragedy);  // manifest beats the header term
    fs::remove_all(dir);
}

TEST_CASE("ingest reports unparseable files without aborting") {
    const fs::path dir = fs::temp_directory_path() / "drama_ingest_bad";
    fs::create_directories(dir);
    {
        std::ofstream good(dir / "a_good.xml");
        good << fixtures::kMinimalTei;
        std::ofstream bad(dir / "b_bad.xml");
        bad << "<TEI><unclosed";
    }
    IngestOptions opts;
    opts.min_characters = 0;
    opts.min_scenes = 0;
    IngestSummary summary;
    const auto plays = ingest_directory(dir, opts, summary);
    CHECK(plays.size() == 1);
    CHECK(summary.failed_files.size() == 1);
    fs::remove_all(dir);
}

TEST_CASE("format_double round-trips") {
    for (double v : {0.0, 1.0, -1.5, 1.0 / 3.0, 5.0 / 6.0, 1e-17, 123456.789}) {
        CHECK(std::stod(io::format_double(v)) == v);
    }
}
