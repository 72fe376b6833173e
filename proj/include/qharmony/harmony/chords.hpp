#pragma once

#include <array>
#include <string>

#include "qharmony/harmony/pitch.hpp"

namespace qharmony::harmony {

enum class Quality { major, minor };

/// Member roles. Triads use root/third/fifth only.
enum class ChordRole { root, third, fifth, seventh };

enum class ChordKind { dim7, triad };

inline constexpr std::array<ChordRole, 4> kDim7Roles = {ChordRole::root, ChordRole::third, ChordRole::fifth,
                                                        ChordRole::seventh};

/// Semitones above the root of each member of a diminished seventh chord.
int dim7_offset(ChordRole role);

/// The diminished seventh pitch-class sets {0,3,6,9} + index, ascending.
/// Throws std::out_of_range unless 0 <= index <= 2.
std::array<PitchClass, 4> dim7_pc_set(int index);

/// Which of the three sets contains pc.
int dim7_set_index(PitchClass pc);

/// Root of the diminished seventh chord whose `role` member is `bass`.
PitchClass root_from_bass_role(PitchClass bass, ChordRole role);

/// Leading-tone resolution target: one semitone above the root.
PitchClass resolution_root(PitchClass dim7_root);

struct Key {
  NoteName tonic;
  Quality mode = Quality::major;

  bool operator==(const Key&) const = default;
};

/// Signed key-signature size: sharps positive, flats negative.
int key_signature(const Key& key);

/// Short analysis name: "C", "E♭" for major, "b", "f♯" for minor.
std::string key_name(const Key& key, Glyphs glyphs = Glyphs::unicode);
/// "C major", "f♯ minor".
std::string key_long_name(const Key& key, Glyphs glyphs = Glyphs::unicode);

/// Spelling of a triad root whose key (major for major, minor for minor)
/// has the fewest accidentals; ties go to the sharp side.
NoteName spell_triad_root(PitchClass pc, Quality quality);

/// The note a semitone below `target` on the letter below it (E -> D♯,
/// C -> B). Throws std::out_of_range when that needs a triple accidental.
NoteName leading_tone_spelling(const NoteName& target);

struct Dim7Spec {
  int set_index = 0;
  NoteName root;
  std::array<NoteName, 4> members;  // root, third, fifth, seventh

  const NoteName& member(ChordRole role) const { return members[static_cast<std::size_t>(role)]; }

  bool operator==(const Dim7Spec&) const = default;
};

/// Root then three stacked minor thirds (letter +2, semitones +3 each).
/// Throws std::invalid_argument if root is not in the set, std::out_of_range
/// if a member would need a triple accidental.
Dim7Spec spell_dim7(const NoteName& root, int set_index);

struct TriadSpec {
  NoteName root;
  Quality quality = Quality::major;

  /// root, third, fifth. Throws std::out_of_range on a triple accidental.
  std::array<NoteName, 3> members() const;
  NoteName member(ChordRole role) const;

  bool operator==(const TriadSpec&) const = default;
};

/// Interval in semitones from a triad's root to one of its members.
int triad_offset(ChordRole role, Quality quality);

/// Inversion figures: dim7 7, 6/5, 4/3, 4/2; triad "", 6, 6/4.
/// Throws std::invalid_argument for a seventh in a triad.
std::string figured_bass(ChordKind kind, ChordRole bass_role);

std::string to_string(Quality quality);
std::string to_string(ChordRole role);

}  // namespace qharmony::harmony
