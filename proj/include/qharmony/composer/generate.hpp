#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qharmony/composer/voicing.hpp"
#include "qharmony/harmony/analysis.hpp"
#include "qharmony/qsim/decisions.hpp"

namespace qharmony::composer {

enum class Backend { quantum, classical };

std::string to_string(Backend backend);
std::string to_string(qsim::Uniform3Method method);

/// One step's three decisions.
struct StepDecision {
  int set_index = 0;
  ChordRole bass_role = ChordRole::root;
  Quality quality = Quality::major;

  bool operator==(const StepDecision&) const = default;
};

/// Decisions plus the raw bits that produced them: one bitstring each for
/// the set, the bass role and the quality.
struct DecisionTrace {
  StepDecision decision;
  Backend backend = Backend::quantum;
  qsim::Uniform3Method method = qsim::Uniform3Method::anticontrolled;
  std::vector<std::string> bits;

  /// 0..23, unique per (set, role, quality).
  int outcome_index() const;

  bool operator==(const DecisionTrace&) const = default;
};

struct ProgressionEvent {
  harmony::Chord chord;
  Voicing voicing;
  ChordRole bass_role = ChordRole::root;
  std::optional<DecisionTrace> trace;
  std::string label;
  harmony::Key key;
  bool key_change = false;

  harmony::ChordKind kind() const;

  bool operator==(const ProgressionEvent&) const = default;
};

struct GenerateConfig {
  std::size_t length = 0;  // diminished-seventh/triad pairs after the start chord
  std::uint64_t seed = 0;
  Backend backend = Backend::quantum;
  qsim::Uniform3Method method = qsim::Uniform3Method::anticontrolled;
  std::optional<qsim::Weights3> weights;  // set choice only
  harmony::Key start_key{harmony::NoteName(harmony::Letter::C, 0), Quality::major};
};

/// Draws step decisions from a seeded backend. The quantum backend measures
/// the decision circuits; the classical one spends fair bits (rejection for
/// the three-way choice, inverse CDF on one 53-bit draw when weighted).
class DecisionMaker {
 public:
  DecisionMaker(Backend backend, qsim::Uniform3Method method, std::optional<qsim::Weights3> weights,
                std::uint64_t seed);

  DecisionTrace next();

 private:
  Backend backend_;
  qsim::Uniform3Method method_;
  std::optional<qsim::Weights3> weights_;
  qsim::Sampler sampler_;
};

/// Start chord then, for each decision, the voiced diminished seventh and its
/// resolution, annotated from `start_key`.
std::vector<ProgressionEvent> replay(const harmony::Key& start_key, std::span<const StepDecision> decisions);

/// As replay(), with the decisions drawn from `config`'s backend and their
/// traces attached to both events of each step. Deterministic per config.
std::vector<ProgressionEvent> generate(const GenerateConfig& config);

struct TwoChordProgression {
  StepDecision decision;
  VoicedDim7 dim7;
  VoicedTriad triad;
};

/// All 3 x 4 x 2 decision outcomes from `start`, in (set, role, quality) order.
std::vector<TwoChordProgression> enumerate_two_chord(const Voicing& start);

}  // namespace qharmony::composer
