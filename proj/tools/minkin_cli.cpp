#include <iostream>

#include "minkin/cli/dispatch.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = minkin::cli::dispatch(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
