#include "qharmony/qsim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qharmony::qsim {

namespace {

// Evolution without the measurement check; sampling needs it.
StateVector evolve(const Circuit& circuit) {
  StateVector state(circuit.n_qubits());
  for (const auto& gate : circuit.gates()) {
    state.apply(gate);
  }
  return state;
}

void validate_measurements(const Circuit& circuit) {
  std::vector<bool> seen(static_cast<std::size_t>(circuit.n_clbits()), false);
  for (const auto& m : circuit.measurements()) {
    if (m.clbit < 0 || m.clbit >= circuit.n_clbits() || seen[static_cast<std::size_t>(m.clbit)]) {
      throw std::invalid_argument("sample: each measurement needs a distinct clbit");
    }
    seen[static_cast<std::size_t>(m.clbit)] = true;
  }
}

struct OutcomeTable {
  std::vector<double> cdf;
  std::vector<std::string> keys;  // clbit rendering per basis state
};

OutcomeTable build_outcomes(const Circuit& circuit) {
  validate_measurements(circuit);
  const auto probs = probabilities(evolve(circuit));
  OutcomeTable table;
  table.cdf.reserve(probs.size());
  table.keys.reserve(probs.size());
  double running = 0.0;
  for (std::size_t basis = 0; basis < probs.size(); ++basis) {
    running += probs[basis];
    table.cdf.push_back(running);
    std::uint64_t bits = 0;
    for (const auto& m : circuit.measurements()) {
      if ((basis >> m.qubit) & 1U) {
        bits |= std::uint64_t{1} << m.clbit;
      }
    }
    table.keys.push_back(to_bitstring(bits, circuit.n_clbits()));
  }
  return table;
}

const std::string& draw(const OutcomeTable& table, Rng& rng) {
  const double u = rng.next_double() * table.cdf.back();
  auto it = std::upper_bound(table.cdf.begin(), table.cdf.end(), u);
  if (it == table.cdf.end()) {
    --it;
  }
  // Skip zero-width bins left behind by rounding at the top of the range.
  auto index = static_cast<std::size_t>(it - table.cdf.begin());
  while (index > 0 && table.cdf[index] == table.cdf[index - 1]) {
    --index;
  }
  return table.keys[index];
}

}  // namespace

Matrix2 gate_matrix(const GateOp& gate) {
  using namespace std::complex_literals;
  switch (gate.kind) {
    case GateKind::H: {
      const double s = 1.0 / std::numbers::sqrt2;
      return {s, s, s, -s};
    }
    case GateKind::X:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Rx: {
      const double c = std::cos(gate.theta / 2.0);
      const double s = std::sin(gate.theta / 2.0);
      return {c, -1i * s, -1i * s, c};
    }
  }
  throw std::logic_error("unknown gate kind");
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > Circuit::kMaxQubits) {
    throw std::invalid_argument("statevector: qubit count out of range");
  }
  amplitudes_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

void StateVector::apply(const GateOp& gate) {
  if (gate.target < 0 || gate.target >= n_qubits_ ||
      (gate.control && (gate.control->qubit < 0 || gate.control->qubit >= n_qubits_))) {
    throw std::invalid_argument("statevector: gate index out of range");
  }
  const Matrix2 m = gate_matrix(gate);
  const std::size_t target_bit = std::size_t{1} << gate.target;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & target_bit) {
      continue;
    }
    if (gate.control) {
      const bool control_set = (i >> gate.control->qubit) & 1U;
      const bool wants_set = gate.control->polarity == ControlPolarity::on_one;
      if (control_set != wants_set) {
        continue;
      }
    }
    const std::size_t j = i | target_bit;
    const Amplitude a = amplitudes_[i];
    const Amplitude b = amplitudes_[j];
    amplitudes_[i] = m[0] * a + m[1] * b;
    amplitudes_[j] = m[2] * a + m[3] * b;
  }
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& amp : amplitudes_) {
    total += std::norm(amp);
  }
  return total;
}

StateVector statevector(const Circuit& circuit) {
  if (!circuit.measurements().empty()) {
    throw std::logic_error("statevector: circuit contains measurements");
  }
  return evolve(circuit);
}

std::vector<double> probabilities(const StateVector& state) {
  std::vector<double> probs;
  probs.reserve(state.dimension());
  for (const auto& amp : state.amplitudes()) {
    probs.push_back(std::norm(amp));
  }
  return probs;
}

std::map<std::string, double> probability_map(const StateVector& state) {
  std::map<std::string, double> out;
  const auto probs = probabilities(state);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    out.emplace(to_bitstring(i, state.n_qubits()), probs[i]);
  }
  return out;
}

std::string to_bitstring(std::uint64_t value, int width) {
  std::string bits(static_cast<std::size_t>(width), '0');
  for (int b = 0; b < width; ++b) {
    if ((value >> b) & 1U) {
      bits[static_cast<std::size_t>(width - 1 - b)] = '1';
    }
  }
  return bits;
}

std::string measure_once(const Circuit& circuit, Rng& rng) {
  return draw(build_outcomes(circuit), rng);
}

Counts sample(const Circuit& circuit, std::uint64_t shots, std::uint64_t seed) {
  Counts result;
  result.seed = seed;
  if (shots == 0) {
    validate_measurements(circuit);
    return result;
  }
  const OutcomeTable table = build_outcomes(circuit);
  Rng rng(seed);
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    ++result.counts[draw(table, rng)];
  }
  result.shots = shots;
  return result;
}

}  // namespace qharmony::qsim
