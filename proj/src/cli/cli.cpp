#include "qharmony/cli/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "qharmony/qsim/simulator.hpp"
#include "qharmony/render/render.hpp"

namespace qharmony::cli {

namespace {

using harmony::Glyphs;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

struct Demo {
  std::string description;
  std::map<std::string, double> exact;
  std::map<std::string, std::uint64_t> histogram;
};

Demo circuit_demo(const RunConfig& config, std::uint64_t seed) {
  Demo demo;
  const auto run_circuit = [&](const qsim::Circuit& measured) {
    demo.exact = qsim::probability_map(qsim::statevector(measured.without_measurements()));
    demo.histogram = qsim::sample(measured, config.shots, seed).counts;
  };

  if (config.circuit == "coin") {
    demo.description = "one qubit: H, measured to c0";
    run_circuit(qsim::uniform2_circuit());
  } else if (config.circuit == "four-way") {
    demo.description = "two qubits: H on q0 and q1, measured to c0 and c1";
    run_circuit(qsim::uniform4_circuit());
  } else if (config.circuit == "three-way") {
    demo.description = "Rx(arccos 1/3) on q0; H on q1 open-controlled by q0";
    run_circuit(qsim::three_way_circuit());
  } else if (config.circuit == "weighted") {
    if (!config.weights) {
      throw UsageError("--circuit weighted needs --weights");
    }
    demo.description = "Rx on q0 for w1; open-controlled rotation on q1 for w2/(w0+w2)";
    run_circuit(qsim::weighted3_circuit(*config.weights));
  } else if (config.circuit == "three-way-sequential") {
    demo.description = "Rx(arccos 1/3) on q0; if it reads 0, measure an H qubit q1";
    qsim::Circuit first(1, 0);
    first.rx(std::acos(1.0 / 3.0), 0);
    qsim::Circuit second(1, 0);
    second.h(0);
    const auto p1 = qsim::probabilities(qsim::statevector(first));
    const auto p2 = qsim::probabilities(qsim::statevector(second));
    demo.exact = {{"00", p1[0] * p2[0]}, {"01", p1[1]}, {"10", p1[0] * p2[1]}, {"11", 0.0}};
    qsim::Sampler sampler(seed);
    for (const auto& key : {"00", "01", "10", "11"}) {
      demo.histogram[key] = 0;
    }
    for (std::uint64_t shot = 0; shot < config.shots; ++shot) {
      const int choice = qsim::choose_uniform3(sampler, qsim::Uniform3Method::sequential);
      ++demo.histogram[choice == 0 ? "00" : choice == 1 ? "01" : "10"];
    }
  } else {
    throw UsageError("unknown circuit \"" + config.circuit +
                     "\" (coin, four-way, three-way, three-way-sequential, weighted)");
  }
  return demo;
}

int run_simulate(const RunConfig& config, std::uint64_t seed, std::ostream& out) {
  const Demo demo = circuit_demo(config, seed);
  out << "circuit: " << config.circuit << " (" << demo.description << ")\n";
  out << "exact probabilities:\n";
  for (const auto& [bits, p] : demo.exact) {
    out << "  " << bits << "  " << fixed(p, 12) << "\n";
  }
  out << "sampled histogram (shots=" << config.shots << ", seed=" << seed << "):\n";
  for (const auto& [bits, p] : demo.exact) {
    (void)p;
    const auto it = demo.histogram.find(bits);
    out << "  " << bits << "  " << (it == demo.histogram.end() ? 0 : it->second) << "\n";
  }
  return kExitOk;
}

std::string voicing_string(const composer::Voicing& v, Glyphs glyphs) {
  std::string s;
  for (const auto& pitch : v.voices) {
    if (!s.empty()) s += ' ';
    s += harmony::to_string(pitch, glyphs);
  }
  return s;
}

int run_enumerate(const RunConfig& config, Glyphs glyphs, std::ostream& out) {
  const auto key = parse_key(config.key);
  if (!key) {
    throw UsageError("bad --key \"" + config.key + "\"");
  }
  const auto all = composer::enumerate_two_chord(composer::start_voicing(*key));
  int index = 0;
  for (const auto& p : all) {
    std::string dim7 = harmony::to_string(p.dim7.chord.root, glyphs) + (glyphs == Glyphs::ascii ? "o7" : "°7");
    std::string triad = harmony::to_string(p.triad.chord.root, glyphs) + " " + harmony::to_string(p.triad.chord.quality);
    char prefix[16];
    std::snprintf(prefix, sizeof prefix, "%2d ", index++);
    out << prefix << "set=" << p.decision.set_index << " bass=" << harmony::to_string(p.decision.bass_role)
        << " quality=" << harmony::to_string(p.decision.quality) << "  " << dim7 << " ["
        << voicing_string(p.dim7.voicing, glyphs) << "] -> " << triad << " ["
        << voicing_string(p.triad.voicing, glyphs) << "]\n";
  }
  return kExitOk;
}

int run_generate(const RunConfig& config, std::uint64_t seed, Glyphs glyphs, std::ostream& out, std::ostream& err) {
  const auto key = parse_key(config.key);
  if (!key) {
    throw UsageError("bad --key \"" + config.key + "\"");
  }
  composer::GenerateConfig gen;
  gen.length = config.length;
  gen.seed = seed;
  gen.backend = config.backend;
  gen.method = config.method;
  gen.weights = config.weights;
  gen.start_key = *key;
  const render::ScoreDocument doc = render::generate_document(gen);

  std::string payload;
  switch (config.output) {
    case OutputFormat::text: payload = render::to_text(doc, glyphs); break;
    case OutputFormat::json: payload = render::to_json(doc); break;
    case OutputFormat::midi: {
      const auto bytes = render::to_midi(doc, config.tempo_bpm);
      payload.assign(bytes.begin(), bytes.end());
      break;
    }
  }

  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file || !file.write(payload.data(), static_cast<std::streamsize>(payload.size()))) {
      err << "qharmony: cannot write " << *config.out_path << "\n";
      return kExitRuntime;
    }
    return kExitOk;
  }
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  return kExitOk;
}

}  // namespace

std::optional<harmony::Key> parse_key(const std::string& text) {
  if (text.empty() || text.size() > 3) {
    return std::nullopt;
  }
  const char first = text[0];
  const bool minor = first >= 'a' && first <= 'g';
  const auto letter = harmony::letter_from_char(minor ? static_cast<char>(first - 'a' + 'A') : first);
  if (!letter) {
    return std::nullopt;
  }
  const std::string rest = text.substr(1);
  static const std::map<std::string, int> kAccidentals = {{"", 0}, {"#", 1}, {"b", -1}, {"x", 2}, {"bb", -2}};
  const auto acc = kAccidentals.find(rest);
  if (acc == kAccidentals.end()) {
    return std::nullopt;
  }
  harmony::Key key{harmony::NoteName(*letter, acc->second), minor ? harmony::Quality::minor : harmony::Quality::major};
  if (std::abs(harmony::key_signature(key)) > 7) {
    return std::nullopt;
  }
  return key;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool ascii_env) {
  RunConfig config;
  config.ascii = ascii_env;
  std::uint64_t seed_value = 0;
  std::vector<double> weights;

  CLI::App app{"Chord progressions from quantum decision circuits", "qharmony"};
  app.require_subcommand(1);

  const std::map<std::string, composer::Backend> backends = {{"quantum", composer::Backend::quantum},
                                                             {"classical", composer::Backend::classical}};
  const std::map<std::string, qsim::Uniform3Method> methods = {{"sequential", qsim::Uniform3Method::sequential},
                                                               {"anticontrolled", qsim::Uniform3Method::anticontrolled}};
  const std::map<std::string, OutputFormat> formats = {
      {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"midi", OutputFormat::midi}};

  auto* gen = app.add_subcommand("generate", "Generate a progression");
  gen->add_option("--length", config.length, "Diminished-seventh/resolution pairs")->capture_default_str();
  auto* gen_seed = gen->add_option("--seed", seed_value, "RNG seed");
  gen->add_option("--backend", config.backend, "Decision source")
      ->transform(CLI::CheckedTransformer(backends, CLI::ignore_case).description(""))
      ->type_name("{quantum,classical}");
  gen->add_option("--method", config.method, "Three-way decision circuit")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case).description(""))
      ->type_name("{anticontrolled,sequential}");
  gen->add_option("--weights", weights, "Set-choice probabilities w0 w1 w2")->expected(3);
  gen->add_option("--output", config.output, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->type_name("{text,json,midi}");
  gen->add_option("--out-path", config.out_path, "Write to this file instead of stdout");
  gen->add_option("--tempo", config.tempo_bpm, "MIDI tempo in BPM")->capture_default_str();
  gen->add_option("--key", config.key, "Start key, e.g. C, Eb, a, f#")->capture_default_str();
  gen->add_flag("--ascii", config.ascii, "ASCII accidentals (#, b, x, bb)");

  auto* sim = app.add_subcommand("simulate", "Show a decision circuit's distribution");
  sim->add_option("--circuit", config.circuit, "coin, four-way, three-way, three-way-sequential, weighted")
      ->capture_default_str();
  sim->add_option("--shots", config.shots, "Number of measurements")->capture_default_str();
  auto* sim_seed = sim->add_option("--seed", seed_value, "RNG seed");
  sim->add_option("--weights", weights, "Probabilities w0 w1 w2 for --circuit weighted")->expected(3);

  auto* en = app.add_subcommand("enumerate", "List the 24 two-chord progressions");
  en->add_option("--key", config.key, "Start key")->capture_default_str();
  en->add_flag("--ascii", config.ascii, "ASCII accidentals");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (gen->parsed()) config.subcommand = Subcommand::generate;
  if (sim->parsed()) config.subcommand = Subcommand::simulate;
  if (en->parsed()) config.subcommand = Subcommand::enumerate;
  if (gen_seed->count() > 0 || sim_seed->count() > 0) {
    config.seed = seed_value;
  }
  if (!weights.empty()) {
    const double sum = weights[0] + weights[1] + weights[2];
    if (weights[0] < 0 || weights[1] < 0 || weights[2] < 0 || std::abs(sum - 1.0) > 1e-6) {
      err << "qharmony: --weights must be non-negative and sum to 1\n";
      return kExitUsage;
    }
    config.weights = qsim::Weights3{weights[0] / sum, weights[1] / sum, weights[2] / sum};
  }

  std::uint64_t seed = 0;
  if (config.subcommand != Subcommand::enumerate) {
    if (config.seed) {
      seed = *config.seed;
    } else {
      std::random_device device;
      seed = (static_cast<std::uint64_t>(device()) << 32) | device();
      err << "qharmony: seed " << seed << "\n";
    }
  }
  const Glyphs glyphs = config.ascii ? Glyphs::ascii : Glyphs::unicode;

  try {
    switch (config.subcommand) {
      case Subcommand::generate: return run_generate(config, seed, glyphs, out, err);
      case Subcommand::simulate: return run_simulate(config, seed, out);
      case Subcommand::enumerate: return run_enumerate(config, glyphs, out);
    }
  } catch (const UsageError& e) {
    err << "qharmony: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qharmony: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitRuntime;
}

}  // namespace qharmony::cli
