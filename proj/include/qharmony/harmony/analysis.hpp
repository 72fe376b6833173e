#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qharmony/harmony/chords.hpp"

namespace qharmony::harmony {

using Chord = std::variant<Dim7Spec, TriadSpec>;

struct AnalysisChord {
  Chord chord;
  ChordRole bass_role = ChordRole::root;
};

struct Annotation {
  std::string label;
  Key key;
  bool key_change = false;  // key differs from the previous event's
};

/// Scale degree (0 = tonic) of a major or minor triad on `root` that is
/// diatonic to `key` with the same quality. Minor keys use the natural minor
/// triads plus the major dominant.
std::optional<int> diatonic_degree(const Key& key, PitchClass root, Quality quality);

/// "I".."VII", lower case for minor.
std::string roman_numeral(int degree, Quality quality);

/// Roman-numeral analysis of a progression that alternates diminished
/// sevenths and triads after an opening triad.
///
/// A diminished seventh is labelled as the leading-tone chord of the triad
/// that follows it: "♯vii°<figure>/<degree>", with the "/<degree>" dropped
/// when the target is the tonic. If that triad is not diatonic to the current
/// key, the key moves to the triad's own key (major or minor) starting at the
/// diminished seventh. Triads are labelled "<degree><figure>".
///
/// Throws std::invalid_argument if a diminished seventh is not followed by a
/// triad.
std::vector<Annotation> annotate(std::span<const AnalysisChord> events, const Key& start_key);

}  // namespace qharmony::harmony
