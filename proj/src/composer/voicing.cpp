#include "qharmony/composer/voicing.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <tuple>
#include <vector>

namespace qharmony::composer {

using harmony::NoteName;

namespace {

constexpr std::array<VoiceRange, 4> kRanges = {{
    {40, 64},  // E2..E4
    {48, 69},  // C3..A4
    {55, 76},  // G3..E5
    {60, 81},  // C4..A5
}};

// MIDI numbers of `pc` inside the voice's range, nearest to `from` first;
// equal distances put the lower pitch first.
std::vector<int> realizations(PitchClass pc, Voice voice, int from) {
  const VoiceRange range = voice_range(voice);
  std::vector<int> out;
  for (int m = range.low; m <= range.high; ++m) {
    if (PitchClass(m) == pc) {
      out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end(), [from](int a, int b) {
    return std::make_tuple(std::abs(a - from), a) < std::make_tuple(std::abs(b - from), b);
  });
  return out;
}

bool ordered_in_range(const std::array<int, 4>& midi) {
  for (std::size_t v = 0; v < 4; ++v) {
    if (!kRanges[v].contains(midi[v])) {
      return false;
    }
    if (v > 0 && midi[v - 1] > midi[v]) {
      return false;
    }
  }
  return true;
}

}  // namespace

VoiceRange voice_range(Voice voice) { return kRanges[static_cast<std::size_t>(voice)]; }

std::string to_string(Voice voice) {
  switch (voice) {
    case Voice::bass: return "bass";
    case Voice::tenor: return "tenor";
    case Voice::alto: return "alto";
    case Voice::soprano: return "soprano";
  }
  return "?";
}

std::array<int, 4> Voicing::midi() const {
  return {voices[0].midi(), voices[1].midi(), voices[2].midi(), voices[3].midi()};
}

bool satisfies_invariants(const Voicing& voicing) { return ordered_in_range(voicing.midi()); }

void check_invariants(const Voicing& voicing) {
  const auto midi = voicing.midi();
  for (std::size_t v = 0; v < 4; ++v) {
    if (!kRanges[v].contains(midi[v])) {
      throw VoicingError(to_string(kVoices[v]) + " " + harmony::to_string(voicing.voices[v], harmony::Glyphs::ascii) +
                         " is out of range");
    }
    if (v > 0 && midi[v - 1] > midi[v]) {
      throw VoicingError(to_string(kVoices[v - 1]) + " crosses above " + to_string(kVoices[v]));
    }
  }
}

int total_motion(const Voicing& from, const Voicing& to) {
  const auto a = from.midi();
  const auto b = to.midi();
  int total = 0;
  for (std::size_t v = 0; v < 4; ++v) {
    total += std::abs(a[v] - b[v]);
  }
  return total;
}

Voicing default_start_voicing() { return start_voicing(harmony::Key{NoteName(harmony::Letter::C, 0), Quality::major}); }

Voicing start_voicing(const harmony::Key& key) {
  int shift = pc_of(key.tonic).value();
  if (shift > 6) {
    shift -= 12;
  }
  const TriadSpec tonic{key.tonic, key.mode};
  const int third = harmony::triad_offset(ChordRole::third, key.mode);
  Voicing v;
  v[Voice::bass] = harmony::realize(tonic.member(ChordRole::root), 48 + shift);
  v[Voice::tenor] = harmony::realize(tonic.member(ChordRole::fifth), 55 + shift);
  v[Voice::alto] = harmony::realize(tonic.member(ChordRole::third), 60 + third + shift);
  v[Voice::soprano] = harmony::realize(tonic.member(ChordRole::root), 72 + shift);
  return v;
}

NearestMember nearest_set_member(PitchClass bass, int set_index) {
  const auto set = harmony::dim7_pc_set(set_index);
  NearestMember best{set[0], std::numeric_limits<int>::max()};
  for (const auto member : set) {
    const int up = harmony::mod12(member.value() - bass.value());
    const int distance = std::min(up, 12 - up);
    if (distance < best.distance) {
      best = {member, distance};
    }
  }
  return best;
}

NoteName resolution_root_spelling(const NoteName& dim7_root, Quality quality) {
  const PitchClass target = harmony::resolution_root(pc_of(dim7_root));
  if (auto spelled = harmony::spell_on_letter(harmony::letter_step(dim7_root.letter(), 1), target)) {
    return *spelled;
  }
  return harmony::spell_triad_root(target, quality);
}

MemberResolution resolve_member(ChordRole dim7_role, Quality quality) {
  switch (dim7_role) {
    case ChordRole::root:
      return {1, ChordRole::root};
    case ChordRole::fifth:
      return {quality == Quality::major ? -1 : -2, ChordRole::third};
    case ChordRole::seventh:
      return {-1, ChordRole::fifth};
    case ChordRole::third:
      break;
  }
  // The third goes to the nearest tone of the target triad; a tie goes down.
  const int from = harmony::dim7_offset(ChordRole::third);
  MemberResolution best{std::numeric_limits<int>::max(), ChordRole::root};
  for (const ChordRole role : {ChordRole::root, ChordRole::third, ChordRole::fifth}) {
    int step = harmony::mod12(1 + harmony::triad_offset(role, quality) - from);
    if (step > 6) {
      step -= 12;
    }
    if (std::abs(step) < std::abs(best.semitones) || (std::abs(step) == std::abs(best.semitones) && step < best.semitones)) {
      best = {step, role};
    }
  }
  return best;
}

VoicedDim7 voice_dim7(const Voicing& prev, int set_index, ChordRole bass_role, Quality target_quality) {
  const NearestMember bass = nearest_set_member(pc_of(prev[Voice::bass]), set_index);
  const PitchClass root_pc = harmony::root_from_bass_role(bass.pc, bass_role);
  const NoteName target = harmony::spell_triad_root(harmony::resolution_root(root_pc), target_quality);
  const Dim7Spec chord = harmony::spell_dim7(harmony::leading_tone_spelling(target), set_index);

  std::array<ChordRole, 3> upper{};
  std::size_t n = 0;
  for (const ChordRole role : harmony::kDim7Roles) {
    if (role != bass_role) {
      upper[n++] = role;
    }
  }

  const auto from = prev.midi();
  const auto member_pc = [&](ChordRole role) { return pc_of(chord.member(role)); };
  const std::vector<int> bass_options = realizations(bass.pc, Voice::bass, from[0]);

  bool found = false;
  std::tuple<int, int, std::array<int, 4>> best_cost{};
  std::array<int, 4> best_midi{};
  std::array<ChordRole, 4> best_roles{};

  do {
    const std::array<ChordRole, 4> roles = {bass_role, upper[0], upper[1], upper[2]};
    std::array<int, 4> shift{};
    for (std::size_t v = 0; v < 4; ++v) {
      shift[v] = resolve_member(roles[v], target_quality).semitones;
    }
    const auto tenor = realizations(member_pc(upper[0]), Voice::tenor, from[1]);
    const auto alto = realizations(member_pc(upper[1]), Voice::alto, from[2]);
    const auto soprano = realizations(member_pc(upper[2]), Voice::soprano, from[3]);
    for (const int b : bass_options) {
      for (const int t : tenor) {
        for (const int a : alto) {
          for (const int s : soprano) {
            const std::array<int, 4> midi = {b, t, a, s};
            if (!ordered_in_range(midi)) {
              continue;
            }
            const std::array<int, 4> resolved = {b + shift[0], t + shift[1], a + shift[2], s + shift[3]};
            if (!ordered_in_range(resolved)) {
              continue;
            }
            int motion = 0;
            for (std::size_t v = 0; v < 4; ++v) {
              motion += std::abs(midi[v] - from[v]);
            }
            const std::tuple<int, int, std::array<int, 4>> cost{motion, b + t + a + s, midi};
            if (!found || cost < best_cost) {
              found = true;
              best_cost = cost;
              best_midi = midi;
              best_roles = roles;
            }
          }
        }
      }
    }
  } while (std::next_permutation(upper.begin(), upper.end()));

  if (!found) {
    throw VoicingError("voice_dim7: no voicing of set " + std::to_string(set_index) + " with the bass as " +
                       harmony::to_string(bass_role) + " keeps the voices in range");
  }

  VoicedDim7 out{chord, {}, best_roles};
  for (std::size_t v = 0; v < 4; ++v) {
    out.voicing.voices[v] = harmony::realize(chord.member(best_roles[v]), best_midi[v]);
  }
  return out;
}

VoicedTriad resolve_dim7(const VoicedDim7& dim7, Quality quality) {
  const TriadSpec triad{resolution_root_spelling(dim7.chord.root, quality), quality};
  VoicedTriad out{triad, {}, {}};
  const auto midi = dim7.voicing.midi();
  for (std::size_t v = 0; v < 4; ++v) {
    const MemberResolution step = resolve_member(dim7.roles[v], quality);
    out.roles[v] = step.lands_on;
    out.voicing.voices[v] = harmony::realize(triad.member(step.lands_on), midi[v] + step.semitones);
  }
  check_invariants(out.voicing);
  return out;
}

}  // namespace qharmony::composer
