#include "qharmony/qsim/decisions.hpp"

#include <algorithm>
#include <cmath>

#include "qharmony/qsim/simulator.hpp"

namespace qharmony::qsim {

std::string Sampler::measure(const Circuit& circuit) { return measure_once(circuit, rng_); }

void Sampler::record(std::string decision, std::string bits) {
  trace_.push_back({std::move(decision), std::move(bits)});
}

std::size_t Sampler::bits_consumed() const {
  std::size_t total = 0;
  for (const auto& entry : trace_) {
    total += entry.bits.size();
  }
  return total;
}

void validate_weights(const Weights3& w, double tolerance) {
  if (!(w.w0 >= 0.0) || !(w.w1 >= 0.0) || !(w.w2 >= 0.0)) {
    throw std::invalid_argument("weights must be non-negative");
  }
  if (std::abs(w.w0 + w.w1 + w.w2 - 1.0) > tolerance) {
    throw std::invalid_argument("weights must sum to 1");
  }
}

double rx_angle_for_prob(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("rx_angle_for_prob: probability outside [0, 1]");
  }
  return std::acos(1.0 - 2.0 * p);
}

Circuit uniform2_circuit() {
  Circuit c(1, 1);
  c.h(0).measure(0, 0);
  return c;
}

Circuit uniform4_circuit() {
  Circuit c(2, 2);
  c.h(0).h(1).measure(0, 0).measure(1, 1);
  return c;
}

Circuit three_way_circuit() {
  Circuit c(2, 2);
  c.rx(std::acos(1.0 / 3.0), 0).h(1, on_zero(0)).measure(0, 0).measure(1, 1);
  return c;
}

Circuit weighted3_circuit(const Weights3& w) {
  validate_weights(w);
  Circuit c(2, 2);
  c.rx(rx_angle_for_prob(w.w1), 0);
  const double rest = w.w0 + w.w2;
  const double conditional = rest > 0.0 ? std::clamp(w.w2 / rest, 0.0, 1.0) : 0.0;
  // An even split is exactly the Hadamard of the uniform circuit.
  if (std::abs(conditional - 0.5) < 1e-12) {
    c.h(1, on_zero(0));
  } else {
    c.rx(rx_angle_for_prob(conditional), 1, on_zero(0));
  }
  c.measure(0, 0).measure(1, 1);
  return c;
}

int choice_from_bits(std::string_view bits) {
  if (bits == "1" || bits == "01") return 1;
  if (bits == "00") return 0;
  if (bits == "10") return 2;
  throw std::invalid_argument("choice_from_bits: no three-way choice for \"" + std::string(bits) + "\"");
}

int choose_uniform2(Sampler& sampler) {
  static const Circuit circuit = uniform2_circuit();
  std::string bits = sampler.measure(circuit);
  const int value = bits == "1" ? 1 : 0;
  sampler.record("uniform2", std::move(bits));
  return value;
}

int choose_uniform4(Sampler& sampler) {
  static const Circuit circuit = uniform4_circuit();
  std::string bits = sampler.measure(circuit);
  const int value = static_cast<int>(std::stoul(bits, nullptr, 2));
  sampler.record("uniform4", std::move(bits));
  return value;
}

int choose_uniform3(Sampler& sampler, Uniform3Method method) {
  std::string bits;
  if (method == Uniform3Method::anticontrolled) {
    static const Circuit circuit = three_way_circuit();
    bits = sampler.measure(circuit);
  } else {
    static const Circuit first = [] {
      Circuit c(1, 1);
      c.rx(std::acos(1.0 / 3.0), 0).measure(0, 0);
      return c;
    }();
    bits = sampler.measure(first);
    if (bits == "0") {
      // q0 read 0: the second qubit supplies the high bit.
      bits = sampler.measure(uniform2_circuit()) + "0";
    }
  }
  const int value = choice_from_bits(bits);
  sampler.record("uniform3", std::move(bits));
  return value;
}

int weighted_choice3(Sampler& sampler, const Weights3& w) {
  std::string bits = sampler.measure(weighted3_circuit(w));
  const int value = choice_from_bits(bits);
  sampler.record("weighted3", std::move(bits));
  return value;
}

}  // namespace qharmony::qsim
