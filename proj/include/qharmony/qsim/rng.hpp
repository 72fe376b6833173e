#pragma once

#include <cstdint>
#include <random>

namespace qharmony::qsim {

/// Seeded 64-bit generator used for every measurement and classical draw.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Only the raw 64-bit words are used (no std distributions), so
/// a seed reproduces the same draws on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) from the top 53 bits of one word.
  double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Most significant bit of one word.
  int next_bit() { return static_cast<int>(engine_() >> 63); }

  std::uint64_t seed() const { return seed_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace qharmony::qsim
