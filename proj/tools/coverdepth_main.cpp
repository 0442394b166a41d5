#include <vector>

#include "coverdepth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return coverdepth::run_cli(args);
}
