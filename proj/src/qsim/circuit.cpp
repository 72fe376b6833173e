#include "qharmony/qsim/circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qharmony::qsim {

Circuit::Circuit(int n_qubits, int n_clbits) : n_qubits_(n_qubits), n_clbits_(n_clbits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("circuit: qubit count must be in 1.." + std::to_string(kMaxQubits) +
                                ", got " + std::to_string(n_qubits));
  }
  if (n_clbits < 0) {
    throw std::invalid_argument("circuit: negative clbit count");
  }
}

Circuit& Circuit::add(const GateOp& gate) {
  if (gate.target < 0 || gate.target >= n_qubits_) {
    throw std::invalid_argument("circuit: gate target " + std::to_string(gate.target) + " out of range");
  }
  if (gate.control) {
    if (gate.control->qubit < 0 || gate.control->qubit >= n_qubits_) {
      throw std::invalid_argument("circuit: control qubit out of range");
    }
    if (gate.control->qubit == gate.target) {
      throw std::invalid_argument("circuit: control qubit equals target");
    }
  }
  if (!std::isfinite(gate.theta)) {
    throw std::invalid_argument("circuit: rotation angle is not finite");
  }
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::h(int target, std::optional<Control> control) {
  return add({GateKind::H, target, 0.0, control});
}

Circuit& Circuit::x(int target, std::optional<Control> control) {
  return add({GateKind::X, target, 0.0, control});
}

Circuit& Circuit::rx(double theta, int target, std::optional<Control> control) {
  return add({GateKind::Rx, target, theta, control});
}

Circuit& Circuit::measure(int qubit, int clbit) {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw std::invalid_argument("circuit: measured qubit out of range");
  }
  if (clbit < 0 || clbit >= n_clbits_) {
    throw std::invalid_argument("circuit: clbit out of range");
  }
  for (const auto& m : measurements_) {
    if (m.clbit == clbit) {
      throw std::invalid_argument("circuit: clbit " + std::to_string(clbit) + " measured twice");
    }
  }
  measurements_.push_back({qubit, clbit});
  return *this;
}

}  // namespace qharmony::qsim
