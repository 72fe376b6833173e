#include "qharmony/harmony/chords.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qharmony::harmony {

int dim7_offset(ChordRole role) { return 3 * static_cast<int>(role); }

std::array<PitchClass, 4> dim7_pc_set(int index) {
  if (index < 0 || index > 2) {
    throw std::out_of_range("dim7_pc_set: index must be 0, 1 or 2");
  }
  return {PitchClass(index), PitchClass(index + 3), PitchClass(index + 6), PitchClass(index + 9)};
}

int dim7_set_index(PitchClass pc) { return pc.value() % 3; }

PitchClass root_from_bass_role(PitchClass bass, ChordRole role) { return bass.transposed(-dim7_offset(role)); }

PitchClass resolution_root(PitchClass dim7_root) { return dim7_root.transposed(1); }

int key_signature(const Key& key) {
  const int fifths = letter_fifths(key.tonic.letter()) + 7 * key.tonic.accidental();
  return key.mode == Quality::major ? fifths : fifths - 3;
}

std::string key_name(const Key& key, Glyphs glyphs) {
  std::string name = to_string(key.tonic, glyphs);
  if (key.mode == Quality::minor) {
    name[0] = static_cast<char>(name[0] - 'A' + 'a');
  }
  return name;
}

std::string key_long_name(const Key& key, Glyphs glyphs) {
  return key_name(key, glyphs) + (key.mode == Quality::major ? " major" : " minor");
}

NoteName spell_triad_root(PitchClass pc, Quality quality) {
  std::optional<NoteName> best;
  int best_signature = 0;
  for (int l = 0; l < 7; ++l) {
    const auto candidate = spell_on_letter(static_cast<Letter>(l), pc);
    if (!candidate) {
      continue;
    }
    const int signature = key_signature(Key{*candidate, quality});
    const bool better = !best || std::abs(signature) < std::abs(best_signature) ||
                        (std::abs(signature) == std::abs(best_signature) && signature > best_signature);
    if (better) {
      best = candidate;
      best_signature = signature;
    }
  }
  return *best;
}

NoteName leading_tone_spelling(const NoteName& target) {
  const Letter below = letter_step(target.letter(), -1);
  const auto spelled = spell_on_letter(below, pc_of(target).transposed(-1));
  if (!spelled) {
    throw std::out_of_range("leading_tone_spelling: " + to_string(target, Glyphs::ascii) +
                            " has no leading tone within double accidentals");
  }
  return *spelled;
}

Dim7Spec spell_dim7(const NoteName& root, int set_index) {
  if (set_index < 0 || set_index > 2) {
    throw std::out_of_range("spell_dim7: set index must be 0, 1 or 2");
  }
  const PitchClass root_pc = pc_of(root);
  if (dim7_set_index(root_pc) != set_index) {
    throw std::invalid_argument("spell_dim7: root " + to_string(root, Glyphs::ascii) + " is not in set " +
                                std::to_string(set_index));
  }
  Dim7Spec spec;
  spec.set_index = set_index;
  spec.root = root;
  for (std::size_t i = 0; i < 4; ++i) {
    const int steps = static_cast<int>(i);
    const auto member = spell_on_letter(letter_step(root.letter(), 2 * steps), root_pc.transposed(3 * steps));
    if (!member) {
      throw std::out_of_range("spell_dim7: " + to_string(root, Glyphs::ascii) +
                              " needs a triple accidental");
    }
    spec.members[i] = *member;
  }
  return spec;
}

int triad_offset(ChordRole role, Quality quality) {
  switch (role) {
    case ChordRole::root: return 0;
    case ChordRole::third: return quality == Quality::major ? 4 : 3;
    case ChordRole::fifth: return 7;
    case ChordRole::seventh: break;
  }
  throw std::invalid_argument("triads have no seventh");
}

std::array<NoteName, 3> TriadSpec::members() const {
  return {member(ChordRole::root), member(ChordRole::third), member(ChordRole::fifth)};
}

NoteName TriadSpec::member(ChordRole role) const {
  const int steps = 2 * static_cast<int>(role);
  const auto spelled = spell_on_letter(letter_step(root.letter(), steps), pc_of(root).transposed(triad_offset(role, quality)));
  if (!spelled) {
    throw std::out_of_range("triad on " + to_string(root, Glyphs::ascii) + " needs a triple accidental");
  }
  return *spelled;
}

std::string figured_bass(ChordKind kind, ChordRole bass_role) {
  if (kind == ChordKind::dim7) {
    switch (bass_role) {
      case ChordRole::root: return "7";
      case ChordRole::third: return "6/5";
      case ChordRole::fifth: return "4/3";
      case ChordRole::seventh: return "4/2";
    }
  } else {
    switch (bass_role) {
      case ChordRole::root: return "";
      case ChordRole::third: return "6";
      case ChordRole::fifth: return "6/4";
      case ChordRole::seventh: break;
    }
  }
  throw std::invalid_argument("figured_bass: role is not a member of the chord");
}

std::string to_string(Quality quality) { return quality == Quality::major ? "major" : "minor"; }

std::string to_string(ChordRole role) {
  switch (role) {
    case ChordRole::root: return "root";
    case ChordRole::third: return "third";
    case ChordRole::fifth: return "fifth";
    case ChordRole::seventh: return "seventh";
  }
  return "?";
}

}  // namespace qharmony::harmony
