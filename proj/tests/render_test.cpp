#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "qharmony/render/render.hpp"
#include "support/smf_reader.hpp"

namespace {

using namespace qharmony;
using composer::Backend;
using composer::GenerateConfig;
using composer::StepDecision;
using harmony::ChordRole;
using harmony::Quality;
using render::ScoreDocument;

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

ScoreDocument start_only() {
  GenerateConfig config;
  config.length = 0;
  return render::generate_document(config);
}

ScoreDocument forced_mediant_run() {
  const std::vector<StepDecision> steps = {{0, ChordRole::seventh, Quality::minor},
                                           {1, ChordRole::fifth, Quality::major},
                                           {2, ChordRole::root, Quality::minor}};
  ScoreDocument doc;
  doc.metadata.length = steps.size();
  doc.events = composer::replay(doc.metadata.key, steps);
  return doc;
}

TEST(Text, StartChordColumn) {
  const auto lines = lines_of(render::to_text(start_only()));
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0].rfind("# qharmony ", 0), 0u);
  std::string column;
  for (std::size_t row = 1; row <= 4; ++row) column += (row > 1 ? "/" : "") + lines[row].substr(3);
  EXPECT_EQ(column, "C5/E4/G3/C3");
  EXPECT_EQ(lines[5].substr(3), "C: I");
}

TEST(Text, LabelsInOrder) {
  const auto text = render::to_text(forced_mediant_run());
  const auto iii = text.find("/iii");
  const auto iv = text.find("/IV");
  const auto vi = text.find("/vi");
  ASSERT_NE(iii, std::string::npos);
  ASSERT_NE(iv, std::string::npos);
  ASSERT_NE(vi, std::string::npos);
  EXPECT_LT(iii, iv);
  EXPECT_LT(iv, vi);
}

TEST(Text, EmptyProgressionIsHeaderOnly) {
  ScoreDocument doc;
  const auto lines = lines_of(render::to_text(doc));
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].rfind("# qharmony ", 0), 0u);
}

TEST(Text, LineCountTracksKeyChanges) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GenerateConfig config;
    config.length = 12;
    config.seed = seed;
    const auto doc = render::generate_document(config);
    std::size_t changes = 0;
    for (const auto& e : doc.events) changes += e.key_change;
    const auto lines = lines_of(render::to_text(doc));
    EXPECT_EQ(lines.size(), 1 + 5 + changes) << seed;
    for (std::size_t i = 1; i < lines.size(); ++i) EXPECT_TRUE(lines[i].empty() || lines[i].back() != ' ');
  }
}

TEST(Text, AsciiGlyphs) {
  GenerateConfig config;
  config.length = 20;
  config.seed = 8;
  const auto text = render::to_text(render::generate_document(config), harmony::Glyphs::ascii);
  for (unsigned char c : text) ASSERT_LT(c, 0x80);
}

TEST(Json, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenerateConfig config;
    config.length = 10;
    config.seed = seed;
    config.backend = seed % 2 ? Backend::classical : Backend::quantum;
    if (seed % 3 == 0) config.weights = qsim::Weights3{0.2, 0.3, 0.5};
    const auto doc = render::generate_document(config);
    const auto text = render::to_json(doc);
    const auto back = render::from_json(text);
    EXPECT_EQ(back, doc) << seed;
    EXPECT_EQ(render::to_json(back), text);
    EXPECT_EQ(render::generate_document(render::config_of(back.metadata)), doc);
  }
}

TEST(Json, TracePresentExactlyWhenEventHasOne) {
  GenerateConfig config;
  config.length = 4;
  config.seed = 11;
  const auto json = nlohmann::json::parse(render::to_json(render::generate_document(config)));
  const auto& events = json.at("events");
  ASSERT_EQ(events.size(), 9u);
  EXPECT_FALSE(events[0].contains("trace"));
  for (std::size_t i = 1; i < events.size(); ++i) EXPECT_TRUE(events[i].contains("trace"));
  EXPECT_EQ(events[0].at("members").size(), 4u);
  EXPECT_EQ(events[0].at("members")[0].at("midi"), 48);
}

TEST(Json, KeysSortedAndStable) {
  GenerateConfig config;
  config.length = 8;
  config.seed = 7;
  const auto a = render::to_json(render::generate_document(config));
  const auto b = render::to_json(render::generate_document(config));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.back(), '\n');
  EXPECT_LT(a.find("\"events\""), a.find("\"metadata\""));
}

TEST(Json, RejectsMalformed) {
  EXPECT_THROW(render::from_json("{"), std::invalid_argument);
  EXPECT_THROW(render::from_json("{}"), std::invalid_argument);
  auto doc = nlohmann::json::parse(render::to_json(start_only()));
  doc["events"][0]["members"][0]["midi"] = 49;
  EXPECT_THROW(render::from_json(doc.dump()), std::invalid_argument);
  doc = nlohmann::json::parse(render::to_json(start_only()));
  doc["events"][0]["members"][0]["accidental"] = 3;
  EXPECT_THROW(render::from_json(doc.dump()), std::invalid_argument);
}

std::size_t count_status(const qharmony::testing::SmfFile& f, std::uint8_t high_nibble) {
  std::size_t n = 0;
  for (const auto& e : f.tracks.at(0)) n += (e.status & 0xF0) == high_nibble;
  return n;
}

TEST(Midi, HeaderBytes) {
  const auto bytes = render::to_midi(start_only());
  const std::vector<std::uint8_t> header = {0x4D, 0x54, 0x68, 0x64, 0, 0, 0, 6, 0, 0, 0, 1, 0x01, 0xE0};
  ASSERT_GE(bytes.size(), header.size());
  EXPECT_TRUE(std::equal(header.begin(), header.end(), bytes.begin()));
}

TEST(Midi, SingleChord) {
  const auto bytes = render::to_midi(start_only());
  const auto f = qharmony::testing::SmfReader(bytes).read();
  EXPECT_EQ(f.format, 0);
  EXPECT_EQ(f.division, 480);
  ASSERT_EQ(f.tracks.size(), 1u);
  EXPECT_EQ(count_status(f, 0x90), 4u);
  EXPECT_EQ(count_status(f, 0x80), 4u);
  const auto& tempo = f.tracks[0].front();
  EXPECT_EQ(tempo.status, 0xFF);
  EXPECT_EQ(tempo.meta_type, 0x51);
  EXPECT_EQ(tempo.data, (std::vector<std::uint8_t>{0x09, 0x27, 0xC0}));
}

TEST(Midi, NotesAndDurationMatchVoicings) {
  GenerateConfig config;
  config.length = 8;
  config.seed = 7;
  const auto doc = render::generate_document(config);
  const auto f = qharmony::testing::SmfReader(render::to_midi(doc, 120)).read();
  const auto& track = f.tracks.at(0);
  EXPECT_EQ(track.back().meta_type, 0x2F);
  EXPECT_EQ(track.back().tick, doc.events.size() * 960);
  std::vector<std::vector<int>> ons(doc.events.size());
  for (const auto& e : track) {
    if ((e.status & 0xF0) != 0x90) continue;
    ASSERT_EQ(e.tick % 960, 0u);
    ASSERT_EQ(e.data.at(1), 80);
    ons.at(e.tick / 960).push_back(e.data.at(0));
  }
  for (std::size_t i = 0; i < doc.events.size(); ++i) {
    const auto midi = doc.events[i].voicing.midi();
    EXPECT_EQ(ons[i], std::vector<int>(midi.begin(), midi.end())) << i;
  }
  EXPECT_EQ(track.front().data, (std::vector<std::uint8_t>{0x07, 0xA1, 0x20}));
}

TEST(Midi, EnharmonicsCollapse) {
  auto doc = start_only();
  doc.events[0].voicing.voices[2] = {harmony::NoteName(harmony::Letter::D, 1), 4};
  doc.events[0].voicing.voices[3] = {harmony::NoteName(harmony::Letter::E, -1), 4};
  const auto f = qharmony::testing::SmfReader(render::to_midi(doc)).read();
  std::vector<int> on;
  for (const auto& e : f.tracks[0])
    if ((e.status & 0xF0) == 0x90) on.push_back(e.data.at(0));
  EXPECT_EQ(on, (std::vector<int>{48, 55, 63, 63}));
}

TEST(Midi, Errors) {
  auto doc = start_only();
  EXPECT_THROW(render::to_midi(doc, 0), std::invalid_argument);
  doc.events[0].voicing.voices[3] = {harmony::NoteName(harmony::Letter::A, 0), 9};
  EXPECT_THROW(render::to_midi(doc), std::invalid_argument);
}

TEST(Midi, EmptyDocument) {
  const auto f = qharmony::testing::SmfReader(render::to_midi(ScoreDocument{})).read();
  ASSERT_EQ(f.tracks.at(0).size(), 2u);
  EXPECT_EQ(f.tracks[0].back().tick, 0u);
}

}  // namespace
