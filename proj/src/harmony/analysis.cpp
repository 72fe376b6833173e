#include "qharmony/harmony/analysis.hpp"

#include <array>
#include <stdexcept>

namespace qharmony::harmony {

namespace {

enum class TriadType { major, minor, diminished };

constexpr std::array<int, 7> kMajorScale = {0, 2, 4, 5, 7, 9, 11};
constexpr std::array<int, 7> kMinorScale = {0, 2, 3, 5, 7, 8, 10};

constexpr std::array<TriadType, 7> kMajorTriads = {TriadType::major, TriadType::minor,      TriadType::minor,
                                                   TriadType::major, TriadType::major,      TriadType::minor,
                                                   TriadType::diminished};
constexpr std::array<TriadType, 7> kMinorTriads = {TriadType::minor, TriadType::diminished, TriadType::major,
                                                   TriadType::minor, TriadType::minor,      TriadType::major,
                                                   TriadType::major};

constexpr int kDominant = 4;

TriadType as_type(Quality q) { return q == Quality::major ? TriadType::major : TriadType::minor; }

// The triad's own key, with the tonic spelled as the triad root.
Key key_of(const TriadSpec& triad) { return Key{triad.root, triad.quality}; }

struct Placement {
  int degree;
  bool key_changed;
};

// Locates a triad in `key`, moving `key` to the triad's key if it is not diatonic.
Placement place(Key& key, const TriadSpec& triad) {
  if (const auto degree = diatonic_degree(key, pc_of(triad.root), triad.quality)) {
    return {*degree, false};
  }
  key = key_of(triad);
  return {0, true};
}

}  // namespace

std::optional<int> diatonic_degree(const Key& key, PitchClass root, Quality quality) {
  const bool major = key.mode == Quality::major;
  const auto& scale = major ? kMajorScale : kMinorScale;
  const auto& triads = major ? kMajorTriads : kMinorTriads;
  const int interval = mod12(root.value() - pc_of(key.tonic).value());
  for (int degree = 0; degree < 7; ++degree) {
    if (scale[static_cast<std::size_t>(degree)] != interval) {
      continue;
    }
    if (triads[static_cast<std::size_t>(degree)] == as_type(quality)) {
      return degree;
    }
    if (!major && degree == kDominant && quality == Quality::major) {
      return degree;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

std::string roman_numeral(int degree, Quality quality) {
  static const std::array<std::string, 7> kUpper = {"I", "II", "III", "IV", "V", "VI", "VII"};
  static const std::array<std::string, 7> kLower = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
  if (degree < 0 || degree > 6) {
    throw std::out_of_range("roman_numeral: degree out of range");
  }
  const auto index = static_cast<std::size_t>(degree);
  return quality == Quality::major ? kUpper[index] : kLower[index];
}

std::vector<Annotation> annotate(std::span<const AnalysisChord> events, const Key& start_key) {
  std::vector<Annotation> out;
  out.reserve(events.size());
  Key key = start_key;
  // Placement of the triad a diminished seventh resolved to; reused for that triad.
  std::optional<Placement> pending;

  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& event = events[i];
    Annotation annotation;
    const Key before = key;

    if (const auto* triad = std::get_if<TriadSpec>(&event.chord)) {
      const Placement placement = pending ? *pending : place(key, *triad);
      pending.reset();
      annotation.label =
          roman_numeral(placement.degree, triad->quality) + figured_bass(ChordKind::triad, event.bass_role);
    } else {
      if (i + 1 >= events.size() || !std::holds_alternative<TriadSpec>(events[i + 1].chord)) {
        throw std::invalid_argument("annotate: a diminished seventh must be followed by its resolution triad");
      }
      const auto& target = std::get<TriadSpec>(events[i + 1].chord);
      const Placement placement = place(key, target);
      pending = Placement{placement.degree, false};
      annotation.label = "♯vii°" + figured_bass(ChordKind::dim7, event.bass_role);
      if (placement.degree != 0) {
        annotation.label += "/" + roman_numeral(placement.degree, target.quality);
      }
    }

    annotation.key = key;
    annotation.key_change = !(key == before);
    out.push_back(std::move(annotation));
  }
  return out;
}

}  // namespace qharmony::harmony
