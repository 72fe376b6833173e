// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qharmony/cli/cli.hpp"
#include "qharmony/composer/generate.hpp"
#include "qharmony/qsim/decisions.hpp"
#include "qharmony/qsim/simulator.hpp"
#include "support/dense_oracle.hpp"
#include "support/smf_reader.hpp"
#include "support/stats.hpp"

namespace {

using namespace qharmony;
using harmony::ChordRole;
using harmony::Quality;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  std::function<Outcome()> check;
};

std::string fmt(const char* format, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, format, value);
  return buffer;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string ascii(const harmony::NoteName& n) { return harmony::to_string(n, harmony::Glyphs::ascii); }
std::string ascii(const harmony::SpelledPitch& p) { return harmony::to_string(p, harmony::Glyphs::ascii); }

const harmony::Key kCMajor{harmony::NoteName(harmony::Letter::C, 0), Quality::major};

Outcome three_way_exact() {
  Outcome o;
  const auto circuit = qsim::three_way_circuit().without_measurements();
  auto probs = qsim::probabilities(qsim::statevector(circuit));
  constexpr int kRuns = 1000;
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < kRuns; ++i) probs = qsim::probabilities(qsim::statevector(circuit));
  const double per_call = seconds_since(start) / kRuns;
  double worst = std::abs(probs[3]);
  for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(probs[static_cast<std::size_t>(i)] - 1.0 / 3));
  o.require(worst <= 1e-12, "max error " + fmt("%.3g", worst));
  o.require(per_call < 1e-3, "runtime " + fmt("%.3g", per_call) + " s");
  if (o.pass) o.detail = "max error " + fmt("%.2g", worst) + ", " + fmt("%.2f", per_call * 1e6) + " us per statevector";
  return o;
}

Outcome rotation_angle() {
  Outcome o;
  const double theta = qsim::rx_angle_for_prob(1.0 / 3);
  o.require(std::abs(theta - 1.23096) <= 1e-5, "angle " + fmt("%.8f", theta));
  qsim::Circuit c(1, 0);
  c.rx(theta, 0);
  const auto p = qsim::probabilities(qsim::statevector(c));
  const double err = std::max(std::abs(p[0] - 2.0 / 3), std::abs(p[1] - 1.0 / 3));
  o.require(err <= 1e-12, "distribution error " + fmt("%.3g", err));
  if (o.pass) o.detail = "angle " + fmt("%.6f", theta) + ", P(0)=" + fmt("%.12f", p[0]);
  return o;
}

Outcome sampling() {
  Outcome o;
  constexpr std::uint64_t kShots = 300000;
  const auto start = std::chrono::steady_clock::now();
  const auto counts = qsim::sample(qsim::three_way_circuit(), kShots, 1);
  const double elapsed = seconds_since(start);
  const auto get = [&](const std::string& k) {
    const auto it = counts.counts.find(k);
    return it == counts.counts.end() ? std::uint64_t{0} : it->second;
  };
  const double sigma3 = testing::three_sigma(kShots, 1.0 / 3);
  std::vector<std::uint64_t> observed;
  for (const std::string k : {"00", "01", "10"}) {
    observed.push_back(get(k));
    o.require(std::abs(static_cast<double>(get(k)) - kShots / 3.0) <= sigma3, k + " count " + std::to_string(get(k)));
  }
  const std::vector<double> expected(3, 1.0 / 3);
  const auto fit = testing::chi_square_fit(observed, expected);
  o.require(fit.p_value > 0.001, "chi-square p " + fmt("%.3g", fit.p_value));
  o.require(get("11") == 0, "11 occurred");
  o.require(elapsed < 1.0, "runtime " + fmt("%.3f", elapsed) + " s");
  if (o.pass) {
    o.detail = std::to_string(get("00")) + "/" + std::to_string(get("01")) + "/" + std::to_string(get("10")) +
               "/0, 3 sigma " + fmt("%.0f", sigma3) + ", p=" + fmt("%.3f", fit.p_value) + ", " +
               fmt("%.3f", elapsed) + " s";
  }
  return o;
}

Outcome classical_baseline() {
  Outcome o;
  qsim::Rng rng(2718);
  constexpr int kTrials = 100000;
  std::uint64_t bits = 0;
  for (int i = 0; i < kTrials; ++i) bits += static_cast<std::uint64_t>(qsim::classical_choice3(rng).bits_consumed);
  const double mean = static_cast<double>(bits) / kTrials;
  o.require(std::abs(mean - 2.667) <= 0.02, "mean " + fmt("%.4f", mean));
  if (o.pass) o.detail = "mean bits " + fmt("%.4f", mean);
  return o;
}

Outcome enumeration() {
  Outcome o;
  const auto all = composer::enumerate_two_chord(composer::default_start_voicing());
  std::set<std::tuple<int, int, int>> decisions;
  std::set<std::pair<int, int>> results;
  for (const auto& p : all) {
    decisions.insert({p.decision.set_index, static_cast<int>(p.decision.bass_role), static_cast<int>(p.decision.quality)});
    results.insert({pc_of(p.triad.chord.root).value(), static_cast<int>(p.triad.chord.quality)});
  }
  o.require(all.size() == 24, std::to_string(all.size()) + " progressions");
  o.require(decisions.size() == 24, std::to_string(decisions.size()) + " distinct decisions");
  o.require(results.size() == 24, std::to_string(results.size()) + " distinct resolutions");
  if (o.pass) o.detail = "24 progressions, 24 distinct (target, quality) results";
  return o;
}

Outcome staying_bass_replay() {
  Outcome o;
  const std::vector<composer::StepDecision> steps = {{0, ChordRole::seventh, Quality::minor}};
  const auto events = composer::replay(kCMajor, steps);
  const auto& dim7 = std::get<harmony::Dim7Spec>(events[1].chord);
  const auto& triad = std::get<harmony::TriadSpec>(events[2].chord);
  o.require(ascii(events[0].voicing.voices[0]) == "C3" && ascii(events[1].voicing.voices[0]) == "C3", "bass moved");
  o.require(ascii(dim7.root) == "D#", "root " + ascii(dim7.root));
  std::string members;
  for (const auto& m : dim7.members) members += ascii(m) + " ";
  o.require(members == "D# F# A C ", "members " + members);
  o.require(ascii(triad.root) == "E" && triad.quality == Quality::minor, "resolution " + ascii(triad.root));
  std::multiset<std::string> moves;
  for (std::size_t v = 0; v < 4; ++v) {
    moves.insert(ascii(events[1].voicing.voices[v].name) + ">" + ascii(events[2].voicing.voices[v].name));
  }
  o.require(moves == std::multiset<std::string>{"D#>E", "C>B", "A>G", "F#>G"}, "voice leading differs");
  if (o.pass) o.detail = "C3 stays; D#dim7 {" + members.substr(0, members.size() - 1) + "} -> E minor; D#>E C>B A>G F#>G";
  return o;
}

Outcome rising_bass_replay() {
  Outcome o;
  const std::vector<composer::StepDecision> steps = {{1, ChordRole::third, Quality::minor}};
  const auto events = composer::replay(kCMajor, steps);
  const auto& dim7 = std::get<harmony::Dim7Spec>(events[1].chord);
  const auto& triad = std::get<harmony::TriadSpec>(events[2].chord);
  o.require(ascii(events[0].voicing.voices[0].name) == "C" && ascii(events[1].voicing.voices[0].name) == "C#",
            "bass " + ascii(events[1].voicing.voices[0]));
  o.require(events[1].voicing.voices[0].midi() - events[0].voicing.voices[0].midi() == 1, "bass not a semitone up");
  o.require(ascii(dim7.root) == "A#", "root " + ascii(dim7.root));
  o.require(ascii(triad.root) == "B" && triad.quality == Quality::minor, "resolution " + ascii(triad.root));
  o.require(events[1].key_change, "no key change at the diminished seventh");
  if (o.pass) o.detail = "C -> C#, A#dim7 -> B minor, key change to " + harmony::key_name(events[1].key, harmony::Glyphs::ascii);
  return o;
}

Outcome voice_leading() {
  Outcome o;
  composer::GenerateConfig config;
  config.length = 10000;
  config.seed = 2024;
  const auto events = composer::generate(config);
  std::size_t bad_voicings = 0;
  std::size_t bad_moves = 0;
  for (const auto& e : events) bad_voicings += !composer::satisfies_invariants(e.voicing);
  for (std::size_t i = 1; i + 1 < events.size(); i += 2) {
    const auto& dim7 = std::get<harmony::Dim7Spec>(events[i].chord);
    const int root = pc_of(dim7.root).value();
    const auto from = events[i].voicing.midi();
    const auto to = events[i + 1].voicing.midi();
    for (std::size_t v = 0; v < 4; ++v) {
      const int delta = to[v] - from[v];
      bool ok = false;
      switch (harmony::mod12(from[v] - root) / 3) {
        case 0: ok = delta == 1; break;
        case 1: ok = std::abs(delta) <= 2; break;
        case 2: ok = delta == -1 || delta == -2; break;
        case 3: ok = delta == -1; break;
      }
      bad_moves += !ok;
    }
  }
  o.require(events.size() == 20001, std::to_string(events.size()) + " events");
  o.require(bad_voicings == 0, std::to_string(bad_voicings) + " voicings break range or crossing");
  o.require(bad_moves == 0, std::to_string(bad_moves) + " voices break resolution rules");
  if (o.pass) o.detail = "10000 steps, 20001 voicings, all rules hold";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t circuits = 0;
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const auto alphabet = testing::gate_alphabet(n);
    std::vector<testing::DenseMatrix> dense;
    for (const auto& g : alphabet) dense.push_back(testing::full_operator(n, g));
    std::vector<std::size_t> picks;
    std::function<void(const std::vector<testing::Complex>&)> walk = [&](const std::vector<testing::Complex>& oracle) {
      qsim::Circuit c(n, 0);
      for (auto i : picks) c.add(alphabet[i]);
      const auto state = qsim::statevector(c);
      ++circuits;
      for (std::size_t k = 0; k < oracle.size(); ++k) worst = std::max(worst, std::abs(state[k] - oracle[k]));
      if (picks.size() == 4) return;
      for (std::size_t i = 0; i < alphabet.size(); ++i) {
        picks.push_back(i);
        walk(testing::multiply(dense[i], oracle));
        picks.pop_back();
      }
    };
    walk(testing::ground_state(n));
  }
  o.require(worst <= 1e-12, "max deviation " + fmt("%.3g", worst));
  if (o.pass) o.detail = std::to_string(circuits) + " circuits, max deviation " + fmt("%.2g", worst);
  return o;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = cli::run(args, out, err);
  return out.str();
}

Outcome reproducibility() {
  Outcome o;
  int code = 0;
  for (const std::string format : {"json", "midi"}) {
    const std::vector<std::string> args = {"generate", "--length", "8", "--seed", "7", "--output", format};
    const auto first = run_cli(args, code);
    o.require(code == 0, format + " exit " + std::to_string(code));
    const auto second = run_cli(args, code);
    o.require(first == second, format + " output differs between runs");
    if (format == "midi") {
      const std::vector<std::uint8_t> bytes(first.begin(), first.end());
      const std::vector<std::uint8_t> header = {0x4D, 0x54, 0x68, 0x64, 0, 0, 0, 6, 0, 0, 0, 1, 0x01, 0xE0};
      o.require(bytes.size() > header.size() && std::equal(header.begin(), header.end(), bytes.begin()),
                "SMF header mismatch");
      try {
        const auto smf = testing::SmfReader(bytes).read();
        o.require(smf.tracks.size() == 1 && smf.tracks[0].back().tick == 17 * 960u, "unexpected track length");
      } catch (const std::exception& e) {
        o.require(false, std::string("SMF reader: ") + e.what());
      }
    }
  }
  if (o.pass) o.detail = "JSON and MIDI byte-identical; 14-byte header; 17 chords parsed";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "three-way circuit exactness", three_way_exact},
      {2, "rotation angle for p=1/3", rotation_angle},
      {3, "three-way sampling", sampling},
      {4, "classical rejection baseline", classical_baseline},
      {5, "two-chord enumeration", enumeration},
      {6, "staying-bass replay", staying_bass_replay},
      {7, "rising-bass replay", rising_bass_replay},
      {8, "voice-leading properties", voice_leading},
      {9, "simulator oracle equivalence", oracle_equivalence},
      {10, "reproducibility", reproducibility},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", c.number, c.title.c_str(), o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
