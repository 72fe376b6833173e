#include "qharmony/harmony/pitch.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace qharmony::harmony {

namespace {

constexpr std::array<int, 7> kLetterSemitones = {0, 2, 4, 5, 7, 9, 11};
constexpr std::array<int, 7> kLetterFifths = {0, 2, 4, -1, 1, 3, 5};
constexpr std::string_view kLetterChars = "CDEFGAB";

constexpr std::string_view kSharp = "♯";
constexpr std::string_view kFlat = "♭";
constexpr std::string_view kDoubleSharp = "\U0001D12A";
constexpr std::string_view kDoubleFlat = "\U0001D12B";
constexpr std::string_view kDegree = "°";

}  // namespace

int letter_semitone(Letter letter) { return kLetterSemitones[static_cast<std::size_t>(letter)]; }

int letter_fifths(Letter letter) { return kLetterFifths[static_cast<std::size_t>(letter)]; }

Letter letter_step(Letter letter, int steps) {
  const int index = ((static_cast<int>(letter) + steps) % 7 + 7) % 7;
  return static_cast<Letter>(index);
}

char letter_char(Letter letter) { return kLetterChars[static_cast<std::size_t>(letter)]; }

std::optional<Letter> letter_from_char(char c) {
  const auto pos = kLetterChars.find(c);
  if (pos == std::string_view::npos) {
    return std::nullopt;
  }
  return static_cast<Letter>(pos);
}

NoteName::NoteName(Letter letter, int accidental) : letter_(letter), accidental_(accidental) {
  if (accidental < kMinAccidental || accidental > kMaxAccidental) {
    throw std::out_of_range("accidental " + std::to_string(accidental) + " outside double-flat..double-sharp");
  }
}

int SpelledPitch::midi() const {
  return 12 * (octave + 1) + letter_semitone(name.letter()) + name.accidental();
}

PitchClass pc_of(const NoteName& name) {
  return PitchClass(letter_semitone(name.letter()) + name.accidental());
}

PitchClass pc_of(const SpelledPitch& pitch) { return pc_of(pitch.name); }

std::optional<NoteName> spell_on_letter(Letter letter, PitchClass pc) {
  // Signed distance from the natural letter, folded into [-6, 5].
  int accidental = mod12(pc.value() - letter_semitone(letter));
  if (accidental > 5) {
    accidental -= 12;
  }
  if (accidental < kMinAccidental || accidental > kMaxAccidental) {
    return std::nullopt;
  }
  return NoteName(letter, accidental);
}

std::vector<NoteName> all_note_names() {
  std::vector<NoteName> names;
  names.reserve(35);
  for (int l = 0; l < 7; ++l) {
    for (int acc = kMinAccidental; acc <= kMaxAccidental; ++acc) {
      names.emplace_back(static_cast<Letter>(l), acc);
    }
  }
  return names;
}

SpelledPitch realize(const NoteName& name, int midi) {
  if (pc_of(name) != PitchClass(midi)) {
    throw std::invalid_argument("realize: " + to_string(name, Glyphs::ascii) + " cannot sound as MIDI " +
                                std::to_string(midi));
  }
  const int offset = letter_semitone(name.letter()) + name.accidental();
  // offset may be -2..13, so B#3 and Cb4 land in the right octaves.
  return SpelledPitch{name, (midi - offset) / 12 - 1};
}

std::string accidental_string(int accidental, Glyphs glyphs) {
  const bool ascii = glyphs == Glyphs::ascii;
  switch (accidental) {
    case -2: return std::string(ascii ? "bb" : kDoubleFlat);
    case -1: return std::string(ascii ? "b" : kFlat);
    case 0: return {};
    case 1: return std::string(ascii ? "#" : kSharp);
    case 2: return std::string(ascii ? "x" : kDoubleSharp);
    default: throw std::out_of_range("accidental out of range");
  }
}

std::string to_string(const NoteName& name, Glyphs glyphs) {
  return std::string(1, letter_char(name.letter())) + accidental_string(name.accidental(), glyphs);
}

std::string to_string(const SpelledPitch& pitch, Glyphs glyphs) {
  return to_string(pitch.name, glyphs) + std::to_string(pitch.octave);
}

std::string asciify(std::string_view text) {
  static const std::array<std::pair<std::string_view, std::string_view>, 5> kReplacements = {{
      {kDoubleSharp, "x"},
      {kDoubleFlat, "bb"},
      {kSharp, "#"},
      {kFlat, "b"},
      {kDegree, "o"},
  }};
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    bool replaced = false;
    for (const auto& [glyph, ascii] : kReplacements) {
      if (text.substr(i, glyph.size()) == glyph) {
        out += ascii;
        i += glyph.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) {
      out += text[i++];
    }
  }
  return out;
}

}  // namespace qharmony::harmony
