#include "qharmony/composer/generate.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

namespace qharmony::composer {

namespace {

using harmony::AnalysisChord;

constexpr std::array<Quality, 2> kQualities = {Quality::major, Quality::minor};

std::string bit_chars(qsim::Rng& rng, int count) {
  std::string bits;
  for (int i = 0; i < count; ++i) {
    bits += static_cast<char>('0' + rng.next_bit());
  }
  return bits;
}

struct Step {
  StepDecision decision;
  std::optional<DecisionTrace> trace;
};

std::vector<ProgressionEvent> build(const harmony::Key& start_key, std::span<const Step> steps) {
  std::vector<ProgressionEvent> events;
  events.reserve(1 + 2 * steps.size());

  const Voicing start = start_voicing(start_key);
  events.push_back({TriadSpec{start_key.tonic, start_key.mode}, start, ChordRole::root, std::nullopt, {}, start_key, false});

  Voicing prev = start;
  for (const Step& step : steps) {
    const auto& d = step.decision;
    const VoicedDim7 dim7 = voice_dim7(prev, d.set_index, d.bass_role, d.quality);
    const VoicedTriad triad = resolve_dim7(dim7, d.quality);
    events.push_back({dim7.chord, dim7.voicing, dim7.bass_role(), step.trace, {}, {}, false});
    events.push_back({triad.chord, triad.voicing, triad.bass_role(), step.trace, {}, {}, false});
    prev = triad.voicing;
  }

  std::vector<AnalysisChord> chords;
  chords.reserve(events.size());
  for (const auto& e : events) {
    chords.push_back({e.chord, e.bass_role});
  }
  const auto annotations = harmony::annotate(chords, start_key);
  for (std::size_t i = 0; i < events.size(); ++i) {
    events[i].label = annotations[i].label;
    events[i].key = annotations[i].key;
    events[i].key_change = annotations[i].key_change;
  }
  return events;
}

}  // namespace

std::string to_string(Backend backend) { return backend == Backend::quantum ? "quantum" : "classical"; }

std::string to_string(qsim::Uniform3Method method) {
  return method == qsim::Uniform3Method::sequential ? "sequential" : "anticontrolled";
}

int DecisionTrace::outcome_index() const {
  return (decision.set_index * 4 + static_cast<int>(decision.bass_role)) * 2 + static_cast<int>(decision.quality);
}

harmony::ChordKind ProgressionEvent::kind() const {
  return std::holds_alternative<Dim7Spec>(chord) ? harmony::ChordKind::dim7 : harmony::ChordKind::triad;
}

DecisionMaker::DecisionMaker(Backend backend, qsim::Uniform3Method method, std::optional<qsim::Weights3> weights,
                             std::uint64_t seed)
    : backend_(backend), method_(method), weights_(weights), sampler_(seed) {
  if (weights_) {
    qsim::validate_weights(*weights_);
  }
}

DecisionTrace DecisionMaker::next() {
  DecisionTrace trace;
  trace.backend = backend_;
  trace.method = method_;

  if (backend_ == Backend::quantum) {
    trace.decision.set_index =
        weights_ ? qsim::weighted_choice3(sampler_, *weights_) : qsim::choose_uniform3(sampler_, method_);
    trace.bits.push_back(sampler_.trace().back().bits);
    trace.decision.bass_role = static_cast<ChordRole>(qsim::choose_uniform4(sampler_));
    trace.bits.push_back(sampler_.trace().back().bits);
    trace.decision.quality = kQualities[static_cast<std::size_t>(qsim::choose_uniform2(sampler_))];
    trace.bits.push_back(sampler_.trace().back().bits);
    return trace;
  }

  qsim::Rng& rng = sampler_.rng();
  if (weights_) {
    // Inverse CDF on one 53-bit uniform; the trace keeps the raw word in hex.
    const std::uint64_t word = rng.next_u64();
    const double u = static_cast<double>(word >> 11) * 0x1.0p-53;
    const std::array<double, 3> w = {weights_->w0, weights_->w1, weights_->w2};
    int value = 0;
    double cumulative = 0.0;
    for (int i = 0; i < 3; ++i) {
      if (w[static_cast<std::size_t>(i)] <= 0.0) {
        continue;
      }
      value = i;
      cumulative += w[static_cast<std::size_t>(i)];
      if (u < cumulative) {
        break;
      }
    }
    trace.decision.set_index = value;
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(word));
    trace.bits.emplace_back(hex);
  } else {
    const auto choice = qsim::classical_choice3(rng);
    trace.decision.set_index = choice.value;
    trace.bits.push_back(choice.bits);
  }
  std::string role_bits = bit_chars(rng, 2);
  trace.decision.bass_role = static_cast<ChordRole>(std::stoi(role_bits, nullptr, 2));
  trace.bits.push_back(std::move(role_bits));
  std::string quality_bit = bit_chars(rng, 1);
  trace.decision.quality = quality_bit == "1" ? Quality::minor : Quality::major;
  trace.bits.push_back(std::move(quality_bit));
  return trace;
}

std::vector<ProgressionEvent> replay(const harmony::Key& start_key, std::span<const StepDecision> decisions) {
  std::vector<Step> steps;
  steps.reserve(decisions.size());
  for (const auto& d : decisions) {
    steps.push_back({d, std::nullopt});
  }
  return build(start_key, steps);
}

std::vector<ProgressionEvent> generate(const GenerateConfig& config) {
  DecisionMaker maker(config.backend, config.method, config.weights, config.seed);
  std::vector<Step> steps;
  steps.reserve(config.length);
  for (std::size_t i = 0; i < config.length; ++i) {
    DecisionTrace trace = maker.next();
    steps.push_back({trace.decision, std::move(trace)});
  }
  return build(config.start_key, steps);
}

std::vector<TwoChordProgression> enumerate_two_chord(const Voicing& start) {
  std::vector<TwoChordProgression> out;
  out.reserve(24);
  for (int set = 0; set < 3; ++set) {
    for (const ChordRole role : harmony::kDim7Roles) {
      for (const Quality quality : kQualities) {
        const StepDecision d{set, role, quality};
        VoicedDim7 dim7 = voice_dim7(start, set, role, quality);
        VoicedTriad triad = resolve_dim7(dim7, quality);
        out.push_back({d, std::move(dim7), std::move(triad)});
      }
    }
  }
  return out;
}

}  // namespace qharmony::composer
