#include <json.hpp>
#include <stdexcept>

#include "qharmony/render/render.hpp"

namespace qharmony::render {

namespace {

using nlohmann::json;
using harmony::ChordRole;
using harmony::Quality;

constexpr std::array<ChordRole, 4> kRoles = {ChordRole::root, ChordRole::third, ChordRole::fifth, ChordRole::seventh};

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument("score json: " + what); }

json name_json(const harmony::NoteName& n) {
  return {{"letter", std::string(1, harmony::letter_char(n.letter()))}, {"accidental", n.accidental()}};
}

harmony::NoteName name_from(const json& j) {
  const auto letter_text = j.at("letter").get<std::string>();
  const auto letter = letter_text.size() == 1 ? harmony::letter_from_char(letter_text[0]) : std::nullopt;
  if (!letter) {
    malformed("bad letter \"" + letter_text + "\"");
  }
  return harmony::NoteName(*letter, j.at("accidental").get<int>());
}

json key_json(const harmony::Key& k) {
  return {{"tonic", name_json(k.tonic)}, {"mode", harmony::to_string(k.mode)}};
}

Quality quality_from(const std::string& s) {
  if (s == "major") return Quality::major;
  if (s == "minor") return Quality::minor;
  malformed("bad quality \"" + s + "\"");
}

ChordRole role_from(const std::string& s) {
  for (const auto role : kRoles) {
    if (harmony::to_string(role) == s) {
      return role;
    }
  }
  malformed("bad role \"" + s + "\"");
}

harmony::Key key_from(const json& j) { return {name_from(j.at("tonic")), quality_from(j.at("mode").get<std::string>())}; }

composer::Backend backend_from(const std::string& s) {
  if (s == "quantum") return composer::Backend::quantum;
  if (s == "classical") return composer::Backend::classical;
  malformed("bad backend \"" + s + "\"");
}

qsim::Uniform3Method method_from(const std::string& s) {
  if (s == "sequential") return qsim::Uniform3Method::sequential;
  if (s == "anticontrolled") return qsim::Uniform3Method::anticontrolled;
  malformed("bad method \"" + s + "\"");
}

json trace_json(const composer::DecisionTrace& t) {
  return {{"set_index", t.decision.set_index},
          {"bass_role", harmony::to_string(t.decision.bass_role)},
          {"quality", harmony::to_string(t.decision.quality)},
          {"backend", composer::to_string(t.backend)},
          {"method", composer::to_string(t.method)},
          {"bits", t.bits}};
}

composer::DecisionTrace trace_from(const json& j) {
  composer::DecisionTrace t;
  t.decision.set_index = j.at("set_index").get<int>();
  t.decision.bass_role = role_from(j.at("bass_role").get<std::string>());
  t.decision.quality = quality_from(j.at("quality").get<std::string>());
  t.backend = backend_from(j.at("backend").get<std::string>());
  t.method = method_from(j.at("method").get<std::string>());
  t.bits = j.at("bits").get<std::vector<std::string>>();
  return t;
}

json event_json(const composer::ProgressionEvent& e) {
  json chord;
  if (const auto* dim7 = std::get_if<harmony::Dim7Spec>(&e.chord)) {
    chord = {{"root", name_json(dim7->root)}, {"set_index", dim7->set_index}};
  } else {
    const auto& triad = std::get<harmony::TriadSpec>(e.chord);
    chord = {{"root", name_json(triad.root)}, {"quality", harmony::to_string(triad.quality)}};
  }
  json members = json::array();
  for (const auto& pitch : e.voicing.voices) {
    members.push_back({{"letter", std::string(1, harmony::letter_char(pitch.name.letter()))},
                       {"accidental", pitch.name.accidental()},
                       {"octave", pitch.octave},
                       {"midi", pitch.midi()}});
  }
  json out = {{"kind", e.kind() == harmony::ChordKind::dim7 ? "dim7" : "triad"},
              {"chord", chord},
              {"bass_role", harmony::to_string(e.bass_role)},
              {"members", members},
              {"label", e.label},
              {"key", key_json(e.key)},
              {"key_change", e.key_change}};
  if (e.trace) {
    out["trace"] = trace_json(*e.trace);
  }
  return out;
}

composer::ProgressionEvent event_from(const json& j) {
  composer::ProgressionEvent e;
  const auto kind = j.at("kind").get<std::string>();
  const json& chord = j.at("chord");
  if (kind == "dim7") {
    e.chord = harmony::spell_dim7(name_from(chord.at("root")), chord.at("set_index").get<int>());
  } else if (kind == "triad") {
    e.chord = harmony::TriadSpec{name_from(chord.at("root")), quality_from(chord.at("quality").get<std::string>())};
  } else {
    malformed("bad kind \"" + kind + "\"");
  }
  const json& members = j.at("members");
  if (!members.is_array() || members.size() != 4) {
    malformed("an event needs four members");
  }
  for (std::size_t v = 0; v < 4; ++v) {
    const auto& m = members[v];
    harmony::SpelledPitch pitch{name_from(m), m.at("octave").get<int>()};
    if (pitch.midi() != m.at("midi").get<int>()) {
      malformed("midi number disagrees with spelling");
    }
    e.voicing.voices[v] = pitch;
  }
  e.bass_role = role_from(j.at("bass_role").get<std::string>());
  e.label = j.at("label").get<std::string>();
  e.key = key_from(j.at("key"));
  e.key_change = j.at("key_change").get<bool>();
  if (j.contains("trace")) {
    e.trace = trace_from(j.at("trace"));
  }
  return e;
}

}  // namespace

std::string to_json(const ScoreDocument& doc) {
  const auto& m = doc.metadata;
  json metadata = {{"seed", m.seed},
                   {"backend", composer::to_string(m.backend)},
                   {"method", composer::to_string(m.method)},
                   {"key", key_json(m.key)},
                   {"length", m.length},
                   {"generator", m.generator}};
  if (m.weights) {
    metadata["weights"] = {m.weights->w0, m.weights->w1, m.weights->w2};
  }
  json events = json::array();
  for (const auto& e : doc.events) {
    events.push_back(event_json(e));
  }
  const json root = {{"metadata", metadata}, {"events", events}};
  return root.dump(2) + "\n";
}

ScoreDocument from_json(std::string_view text) {
  try {
    const json root = json::parse(text);
    ScoreDocument doc;
    const json& m = root.at("metadata");
    doc.metadata.seed = m.at("seed").get<std::uint64_t>();
    doc.metadata.backend = backend_from(m.at("backend").get<std::string>());
    doc.metadata.method = method_from(m.at("method").get<std::string>());
    doc.metadata.key = key_from(m.at("key"));
    doc.metadata.length = m.at("length").get<std::size_t>();
    doc.metadata.generator = m.at("generator").get<std::string>();
    if (m.contains("weights")) {
      const auto w = m.at("weights").get<std::vector<double>>();
      if (w.size() != 3) {
        malformed("weights need three values");
      }
      doc.metadata.weights = qsim::Weights3{w[0], w[1], w[2]};
    }
    for (const auto& e : root.at("events")) {
      doc.events.push_back(event_from(e));
    }
    return doc;
  } catch (const json::exception& e) {
    malformed(e.what());
  } catch (const std::out_of_range& e) {
    malformed(e.what());
  }
}

}  // namespace qharmony::render
