#include <stdexcept>

#include "qharmony/render/render.hpp"

namespace qharmony::render {

namespace {

class ByteWriter {
 public:
  void u8(std::uint8_t b) { bytes_.push_back(b); }

  void u16(std::uint16_t v) {
    u8(static_cast<std::uint8_t>(v >> 8));
    u8(static_cast<std::uint8_t>(v));
  }

  void u32(std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) {
      u8(static_cast<std::uint8_t>(v >> shift));
    }
  }

  void tag(std::string_view four) {
    for (const char c : four) {
      u8(static_cast<std::uint8_t>(c));
    }
  }

  // MIDI variable-length quantity, 7 bits per byte, high bit = more follows.
  void varlen(std::uint32_t v) {
    std::uint8_t buffer[5];
    int n = 0;
    buffer[n++] = static_cast<std::uint8_t>(v & 0x7F);
    while ((v >>= 7) != 0) {
      buffer[n++] = static_cast<std::uint8_t>(0x80 | (v & 0x7F));
    }
    while (n > 0) {
      u8(buffer[--n]);
    }
  }

  void append(const std::vector<std::uint8_t>& other) { bytes_.insert(bytes_.end(), other.begin(), other.end()); }

  std::vector<std::uint8_t>& bytes() { return bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
};

constexpr std::uint8_t kNoteOn = 0x90;
constexpr std::uint8_t kNoteOff = 0x80;

}  // namespace

std::vector<std::uint8_t> to_midi(const ScoreDocument& doc, int tempo_bpm) {
  if (tempo_bpm < 4 || tempo_bpm > 60'000'000) {
    throw std::invalid_argument("to_midi: tempo out of range");
  }
  const auto us_per_quarter = static_cast<std::uint32_t>(60'000'000 / tempo_bpm);

  ByteWriter track;
  track.varlen(0);
  track.u8(0xFF);
  track.u8(0x51);
  track.u8(0x03);
  track.u8(static_cast<std::uint8_t>(us_per_quarter >> 16));
  track.u8(static_cast<std::uint8_t>(us_per_quarter >> 8));
  track.u8(static_cast<std::uint8_t>(us_per_quarter));

  for (const auto& event : doc.events) {
    const auto notes = event.voicing.midi();
    for (const int note : notes) {
      if (note < 0 || note > 127) {
        throw std::invalid_argument("to_midi: note " + std::to_string(note) + " outside 0..127");
      }
    }
    for (const int note : notes) {
      track.varlen(0);
      track.u8(kNoteOn);
      track.u8(static_cast<std::uint8_t>(note));
      track.u8(kVelocity);
    }
    for (std::size_t i = 0; i < notes.size(); ++i) {
      track.varlen(i == 0 ? kChordTicks : 0);
      track.u8(kNoteOff);
      track.u8(static_cast<std::uint8_t>(notes[i]));
      track.u8(0);
    }
  }

  track.varlen(0);
  track.u8(0xFF);
  track.u8(0x2F);
  track.u8(0x00);

  ByteWriter file;
  file.tag("MThd");
  file.u32(6);
  file.u16(0);  // format 0
  file.u16(1);  // one track
  file.u16(kTicksPerQuarter);
  file.tag("MTrk");
  file.u32(static_cast<std::uint32_t>(track.bytes().size()));
  file.append(track.bytes());
  return std::move(file.bytes());
}

}  // namespace qharmony::render
