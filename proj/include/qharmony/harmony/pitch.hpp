#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qharmony::harmony {

enum class Letter : std::uint8_t { C, D, E, F, G, A, B };

inline constexpr int kMinAccidental = -2;
inline constexpr int kMaxAccidental = 2;

/// Semitone of the natural letter above C.
int letter_semitone(Letter letter);
/// Position of the natural letter on the line of fifths (F=-1, C=0 ... B=5).
int letter_fifths(Letter letter);
/// Letter `steps` diatonic steps away (negative steps go down).
Letter letter_step(Letter letter, int steps);
char letter_char(Letter letter);
std::optional<Letter> letter_from_char(char c);

constexpr int mod12(int value) { return ((value % 12) + 12) % 12; }

/// Pitch identity modulo octave, C = 0.
class PitchClass {
 public:
  constexpr PitchClass() = default;
  constexpr explicit PitchClass(int value) : value_(mod12(value)) {}

  constexpr int value() const { return value_; }
  constexpr PitchClass transposed(int semitones) const { return PitchClass(value_ + semitones); }

  auto operator<=>(const PitchClass&) const = default;

 private:
  int value_ = 0;
};

/// Spelled pitch class: a letter plus an accidental in [-2, +2].
class NoteName {
 public:
  constexpr NoteName() = default;
  /// Throws std::out_of_range for an accidental outside [-2, +2].
  NoteName(Letter letter, int accidental);

  Letter letter() const { return letter_; }
  int accidental() const { return accidental_; }

  bool operator==(const NoteName&) const = default;

 private:
  Letter letter_ = Letter::C;
  int accidental_ = 0;
};

/// A spelled pitch in scientific pitch notation (C4 = MIDI 60).
struct SpelledPitch {
  NoteName name;
  int octave = 4;

  int midi() const;

  bool operator==(const SpelledPitch&) const = default;
};

PitchClass pc_of(const NoteName& name);
PitchClass pc_of(const SpelledPitch& pitch);

/// The spelling of `pc` on `letter`, or nullopt if it needs more than a
/// double accidental.
std::optional<NoteName> spell_on_letter(Letter letter, PitchClass pc);

/// The 35 legal spellings (7 letters x 5 accidentals).
std::vector<NoteName> all_note_names();

/// Places `name` at the given MIDI number, which must have the same pitch
/// class (std::invalid_argument otherwise).
SpelledPitch realize(const NoteName& name, int midi);

enum class Glyphs { unicode, ascii };

std::string accidental_string(int accidental, Glyphs glyphs = Glyphs::unicode);
std::string to_string(const NoteName& name, Glyphs glyphs = Glyphs::unicode);
std::string to_string(const SpelledPitch& pitch, Glyphs glyphs = Glyphs::unicode);

/// Replaces the music glyphs (sharp, flat, double sharp, double flat, degree
/// sign) with their ASCII fallbacks: #, b, x, bb, o.
std::string asciify(std::string_view text);

}  // namespace qharmony::harmony
