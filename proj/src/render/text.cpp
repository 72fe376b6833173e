#include <algorithm>
#include <array>
#include <sstream>

#include "qharmony/render/render.hpp"

namespace qharmony::render {

namespace {

std::size_t display_width(std::string_view s) {
  // UTF-8 code points; every glyph used here is one column wide.
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

std::string header_line(const ScoreMetadata& m) {
  std::ostringstream out;
  out << "# " << m.generator << " seed=" << m.seed << " backend=" << composer::to_string(m.backend)
      << " method=" << composer::to_string(m.method) << " key=" << harmony::key_long_name(m.key, harmony::Glyphs::ascii)
      << " length=" << m.length;
  if (m.weights) {
    out << " weights=" << m.weights->w0 << "," << m.weights->w1 << "," << m.weights->w2;
  }
  return out.str();
}

void rstrip(std::string& s) {
  while (!s.empty() && s.back() == ' ') {
    s.pop_back();
  }
}

}  // namespace

std::string to_text(const ScoreDocument& doc, harmony::Glyphs glyphs) {
  std::string out = header_line(doc.metadata) + "\n";
  if (doc.events.empty()) {
    return out;
  }

  // Rows top to bottom: soprano, alto, tenor, bass, label.
  constexpr std::array<composer::Voice, 4> kRowVoices = {composer::Voice::soprano, composer::Voice::alto,
                                                         composer::Voice::tenor, composer::Voice::bass};
  constexpr std::array<std::string_view, 5> kRowNames = {"S  ", "A  ", "T  ", "B  ", "   "};
  std::array<std::string, 5> rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    rows[r] = kRowNames[r];
  }
  std::vector<std::string> key_changes;

  for (std::size_t i = 0; i < doc.events.size(); ++i) {
    const auto& event = doc.events[i];
    std::array<std::string, 5> cells;
    for (std::size_t r = 0; r < 4; ++r) {
      cells[r] = harmony::to_string(event.voicing[kRowVoices[r]], glyphs);
    }
    std::string label = event.label;
    if (i == 0 || event.key_change) {
      label = harmony::key_name(event.key) + ": " + label;
    }
    cells[4] = glyphs == harmony::Glyphs::ascii ? harmony::asciify(label) : label;
    if (event.key_change) {
      const harmony::Key& from = i == 0 ? doc.metadata.key : doc.events[i - 1].key;
      key_changes.push_back("key change at event " + std::to_string(i) + ": " + harmony::key_long_name(from, glyphs) +
                            " -> " + harmony::key_long_name(event.key, glyphs));
    }

    std::size_t width = 0;
    for (const auto& cell : cells) {
      width = std::max(width, display_width(cell));
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      rows[r] += cells[r];
      rows[r].append(width - display_width(cells[r]) + 2, ' ');
    }
  }

  for (auto& row : rows) {
    rstrip(row);
    out += row + "\n";
  }
  for (const auto& line : key_changes) {
    out += line + "\n";
  }
  return out;
}

}  // namespace qharmony::render
