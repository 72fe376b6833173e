#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qharmony/qsim/circuit.hpp"
#include "qharmony/qsim/rng.hpp"

namespace qharmony::qsim {

using Amplitude = std::complex<double>;

// Row-major 2x2 unitary: {m00, m01, m10, m11}.
using Matrix2 = std::array<Amplitude, 4>;

Matrix2 gate_matrix(const GateOp& gate);

/// Pure state over n qubits. Basis index i encodes |i>, qubit 0 being the
/// least significant bit.
class StateVector {
 public:
  /// |0...0>
  explicit StateVector(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  Amplitude operator[](std::size_t index) const { return amplitudes_[index]; }

  void apply(const GateOp& gate);

  double norm_squared() const;

 private:
  int n_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// Evolves |0...0> through the circuit's gates. The circuit must not contain
/// measurements (std::logic_error otherwise); use sample() for those.
StateVector statevector(const Circuit& circuit);

/// |amp_i|^2 for every basis index.
std::vector<double> probabilities(const StateVector& state);

/// Same distribution keyed by n-qubit bitstring (highest qubit leftmost).
std::map<std::string, double> probability_map(const StateVector& state);

/// Renders the low `width` bits of value, most significant first.
std::string to_bitstring(std::uint64_t value, int width);

struct Counts {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  bool operator==(const Counts&) const = default;
};

/// Draws one measurement outcome of the circuit's final state. The result has
/// n_clbits characters, clbit (n-1) leftmost; unmeasured clbits read 0.
/// Consumes exactly one word from rng.
std::string measure_once(const Circuit& circuit, Rng& rng);

/// `shots` independent measurement outcomes, reproducible for a fixed seed.
Counts sample(const Circuit& circuit, std::uint64_t shots, std::uint64_t seed);

}  // namespace qharmony::qsim
