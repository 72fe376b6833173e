#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qharmony/composer/generate.hpp"

namespace qharmony::render {

inline constexpr std::string_view kGeneratorVersion = "qharmony " QHARMONY_VERSION;

struct ScoreMetadata {
  std::uint64_t seed = 0;
  composer::Backend backend = composer::Backend::quantum;
  qsim::Uniform3Method method = qsim::Uniform3Method::anticontrolled;
  std::optional<qsim::Weights3> weights;
  harmony::Key key{harmony::NoteName(harmony::Letter::C, 0), harmony::Quality::major};
  std::size_t length = 0;
  std::string generator{kGeneratorVersion};

  bool operator==(const ScoreMetadata&) const = default;
};

struct ScoreDocument {
  ScoreMetadata metadata;
  std::vector<composer::ProgressionEvent> events;

  bool operator==(const ScoreDocument&) const = default;
};

/// Runs generate() and records the config that reproduces it.
ScoreDocument generate_document(const composer::GenerateConfig& config);

composer::GenerateConfig config_of(const ScoreMetadata& metadata);

/// A metadata comment line, then one column per event: soprano, alto, tenor
/// and bass rows, a label row, and one line per key change. An empty
/// progression yields the comment line only.
std::string to_text(const ScoreDocument& doc, harmony::Glyphs glyphs = harmony::Glyphs::unicode);

/// Canonical JSON: sorted keys, two-space indent, trailing newline.
std::string to_json(const ScoreDocument& doc);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
ScoreDocument from_json(std::string_view text);

inline constexpr int kTicksPerQuarter = 480;
inline constexpr int kChordTicks = 960;
inline constexpr int kVelocity = 80;

/// Standard MIDI File, format 0, one track: a tempo event, then each chord as
/// four note-ons at velocity 80 held for a half note, then end of track.
/// Throws std::invalid_argument for a tempo outside 4..60000000 BPM or a MIDI
/// note outside 0..127.
std::vector<std::uint8_t> to_midi(const ScoreDocument& doc, int tempo_bpm = 100);

}  // namespace qharmony::render
