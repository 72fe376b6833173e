#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qharmony/composer/generate.hpp"

namespace qharmony::cli {

enum class Subcommand { generate, simulate, enumerate };
enum class OutputFormat { text, json, midi };

struct RunConfig {
  Subcommand subcommand = Subcommand::generate;
  std::size_t length = 8;
  std::optional<std::uint64_t> seed;  // drawn from the OS and reported on stderr when absent
  composer::Backend backend = composer::Backend::quantum;
  qsim::Uniform3Method method = qsim::Uniform3Method::anticontrolled;
  std::optional<qsim::Weights3> weights;
  OutputFormat output = OutputFormat::text;
  std::optional<std::string> out_path;
  bool ascii = false;
  int tempo_bpm = 100;
  std::string key = "C";
  std::string circuit = "three-way";
  std::uint64_t shots = 1000;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Parses "C", "F#", "Bb", "e", "f#" (lower case = minor); nullopt if malformed.
std::optional<harmony::Key> parse_key(const std::string& text);

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 success, 1 runtime failure, 2 usage error.
/// `ascii_env` mirrors QHARMONY_ASCII=1.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool ascii_env = false);

}  // namespace qharmony::cli
