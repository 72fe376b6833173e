#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "qharmony/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const char* ascii = std::getenv("QHARMONY_ASCII");
  return qharmony::cli::run(args, std::cout, std::cerr, ascii != nullptr && std::strcmp(ascii, "1") == 0);
}
