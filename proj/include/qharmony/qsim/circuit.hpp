#pragma once

#include <optional>
#include <vector>

namespace qharmony::qsim {

enum class GateKind { H, X, Rx };

enum class ControlPolarity {
  on_one,   // ordinary (closed) control
  on_zero,  // anti-control (open)
};

struct Control {
  int qubit = 0;
  ControlPolarity polarity = ControlPolarity::on_one;

  bool operator==(const Control&) const = default;
};

inline Control on_one(int qubit) { return {qubit, ControlPolarity::on_one}; }
inline Control on_zero(int qubit) { return {qubit, ControlPolarity::on_zero}; }

struct GateOp {
  GateKind kind = GateKind::H;
  int target = 0;
  double theta = 0.0;  // used by Rx only
  std::optional<Control> control;

  bool operator==(const GateOp&) const = default;
};

struct Measurement {
  int qubit = 0;
  int clbit = 0;

  bool operator==(const Measurement&) const = default;
};

/// Ordered list of single-qubit gates (optionally controlled) followed by
/// measurements. Construction and every builder call validate indices, so a
/// Circuit that exists is always well formed.
class Circuit {
 public:
  static constexpr int kMaxQubits = 8;

  /// Throws std::invalid_argument unless 1 <= n_qubits <= kMaxQubits and n_clbits >= 0.
  Circuit(int n_qubits, int n_clbits);

  Circuit& add(const GateOp& gate);
  Circuit& h(int target, std::optional<Control> control = std::nullopt);
  Circuit& x(int target, std::optional<Control> control = std::nullopt);
  Circuit& rx(double theta, int target, std::optional<Control> control = std::nullopt);

  /// Each clbit may be written by at most one measurement.
  Circuit& measure(int qubit, int clbit);

  int n_qubits() const { return n_qubits_; }
  int n_clbits() const { return n_clbits_; }
  const std::vector<GateOp>& gates() const { return gates_; }
  const std::vector<Measurement>& measurements() const { return measurements_; }

  /// Same gates, no measurements: the input statevector() accepts.
  Circuit without_measurements() const {
    Circuit out = *this;
    out.measurements_.clear();
    return out;
  }

 private:
  int n_qubits_;
  int n_clbits_;
  std::vector<GateOp> gates_;
  std::vector<Measurement> measurements_;
};

}  // namespace qharmony::qsim
