#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qharmony/qsim/circuit.hpp"
#include "qharmony/qsim/rng.hpp"

namespace qharmony::qsim {

// Decision circuits built on the simulator. Outcome bitstrings are mapped to
// choices as 00 -> 0, 01 -> 1, 10 -> 2 (clbit 1 leftmost); 11 never occurs in
// the three-way circuits.

enum class Uniform3Method {
  sequential,      // Rx(arccos 1/3) on one qubit; on 0, a second Hadamard qubit
  anticontrolled,  // single circuit: Rx(arccos 1/3) on q0, H on q1 open-controlled by q0
};

struct TraceEntry {
  std::string decision;  // "uniform2", "uniform4", "uniform3", "weighted3"
  std::string bits;      // raw measured bits, one character per consumed bit

  bool operator==(const TraceEntry&) const = default;
};

/// Seeded RNG plus a log of every decision's measured bits. Single owner:
/// not safe to share between threads, but movable.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// One shot of the circuit; does not touch the trace.
  std::string measure(const Circuit& circuit);

  void record(std::string decision, std::string bits);

  const std::vector<TraceEntry>& trace() const { return trace_; }
  std::size_t bits_consumed() const;
  Rng& rng() { return rng_; }

 private:
  Rng rng_;
  std::vector<TraceEntry> trace_;
};

struct Weights3 {
  double w0 = 1.0 / 3.0;
  double w1 = 1.0 / 3.0;
  double w2 = 1.0 / 3.0;

  bool operator==(const Weights3&) const = default;
};

/// Throws std::invalid_argument on a negative weight or a sum off 1 by more than tolerance.
void validate_weights(const Weights3& w, double tolerance = 1e-9);

/// arccos(1 - 2p): the Rx angle that takes |0> to P(1) = p.
double rx_angle_for_prob(double p);

Circuit uniform2_circuit();
Circuit uniform4_circuit();
/// Two-qubit anti-controlled three-way circuit, measured q0->c0, q1->c1.
Circuit three_way_circuit();
/// Generalization of three_way_circuit with outcome probabilities (w0, w1, w2).
Circuit weighted3_circuit(const Weights3& w);

/// Maps 00/01/10 (and the sequential one-bit "1") to 0/1/2.
int choice_from_bits(std::string_view bits);

int choose_uniform2(Sampler& sampler);
int choose_uniform4(Sampler& sampler);
int choose_uniform3(Sampler& sampler, Uniform3Method method);
int weighted_choice3(Sampler& sampler, const Weights3& w);

template <typename Source>
concept BitSource = requires(Source& s) {
  { s.next_bit() } -> std::convertible_to<int>;
};

struct ClassicalChoice {
  int value = 0;
  int bits_consumed = 0;
  std::string bits;
};

inline constexpr int kMaxClassicalRounds = 64;

/// Three-way choice from fair coin flips by rejection: two bits per round,
/// 11 rejected and redrawn. Expected cost is 8/3 bits.
template <BitSource Source>
ClassicalChoice classical_choice3(Source& source) {
  ClassicalChoice result;
  for (int round = 0; round < kMaxClassicalRounds; ++round) {
    const int first = source.next_bit() ? 1 : 0;
    const int second = source.next_bit() ? 1 : 0;
    result.bits += static_cast<char>('0' + first);
    result.bits += static_cast<char>('0' + second);
    result.bits_consumed += 2;
    const int value = 2 * first + second;
    if (value != 3) {
      result.value = value;
      return result;
    }
  }
  throw std::runtime_error("classical_choice3: no acceptance within 64 rounds");
}

}  // namespace qharmony::qsim
