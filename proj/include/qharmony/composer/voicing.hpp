#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "qharmony/harmony/chords.hpp"
#include "qharmony/harmony/pitch.hpp"

namespace qharmony::composer {

using harmony::ChordRole;
using harmony::Dim7Spec;
using harmony::PitchClass;
using harmony::Quality;
using harmony::SpelledPitch;
using harmony::TriadSpec;

enum class Voice { bass, tenor, alto, soprano };

inline constexpr std::array<Voice, 4> kVoices = {Voice::bass, Voice::tenor, Voice::alto, Voice::soprano};

struct VoiceRange {
  int low;   // MIDI, inclusive
  int high;  // MIDI, inclusive

  bool contains(int midi) const { return midi >= low && midi <= high; }
};

/// Bass E2..E4, tenor C3..A4, alto G3..E5, soprano C4..A5.
VoiceRange voice_range(Voice voice);

std::string to_string(Voice voice);

class VoicingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Four spelled voices, bass first.
struct Voicing {
  std::array<SpelledPitch, 4> voices;

  const SpelledPitch& operator[](Voice v) const { return voices[static_cast<std::size_t>(v)]; }
  SpelledPitch& operator[](Voice v) { return voices[static_cast<std::size_t>(v)]; }
  std::array<int, 4> midi() const;

  bool operator==(const Voicing&) const = default;
};

/// Every voice inside its range and bass <= tenor <= alto <= soprano.
bool satisfies_invariants(const Voicing& voicing);
/// Throws VoicingError naming the first violation.
void check_invariants(const Voicing& voicing);

/// Sum of absolute semitone motion over the four voices.
int total_motion(const Voicing& from, const Voicing& to);

/// C3 G3 E4 C5.
Voicing default_start_voicing();

/// Tonic triad of `key`: the default voicing moved by the smallest
/// transposition to the tonic (-5..+6 semitones), third lowered for minor.
Voicing start_voicing(const harmony::Key& key);

struct NearestMember {
  PitchClass pc;
  int distance = 0;  // 0 or 1
};

/// Closest member of diminished seventh set `set_index` to `bass`.
NearestMember nearest_set_member(PitchClass bass, int set_index);

struct VoicedDim7 {
  Dim7Spec chord;
  Voicing voicing;
  std::array<ChordRole, 4> roles;  // chord member sounding in each voice

  ChordRole bass_role() const { return roles[0]; }
};

struct VoicedTriad {
  TriadSpec chord;
  Voicing voicing;
  std::array<ChordRole, 4> roles;

  ChordRole bass_role() const { return roles[0]; }
};

/// Spelling of the resolution triad's root that sits a letter above `dim7_root`.
harmony::NoteName resolution_root_spelling(const harmony::NoteName& dim7_root, Quality quality);

/// Voices the diminished seventh chord chosen by (set_index, bass_role) after `prev`.
///
/// The bass moves to the nearest member of the set and takes `bass_role`,
/// which fixes the root; the root is spelled as the leading tone of the
/// `target_quality` resolution. The voices take the members in the assignment
/// and octaves with the least total motion from `prev` such that both this
/// voicing and its resolution keep the range and no-crossing invariants.
/// Ties go to the lower pitch sum, then to lower pitches from the bass up.
/// Throws VoicingError if no voicing qualifies.
VoicedDim7 voice_dim7(const Voicing& prev, int set_index, ChordRole bass_role, Quality target_quality);

/// Semitone motion of a dim7 member into a `quality` resolution and the triad
/// member it lands on: root +1 (root), third -2 (root, major) or +1 (third,
/// minor), fifth -1/-2 (third), seventh -1 (fifth).
struct MemberResolution {
  int semitones;
  ChordRole lands_on;
};
MemberResolution resolve_member(ChordRole dim7_role, Quality quality);

/// Resolves every voice by its member's rule into the triad a semitone above
/// the root. Throws VoicingError if the result breaks the voicing invariants.
VoicedTriad resolve_dim7(const VoicedDim7& dim7, Quality quality);

}  // namespace qharmony::composer
