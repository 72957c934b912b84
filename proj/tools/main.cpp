#include <string>
#include <vector>

#include "tailcr/cli.hpp"

int main(int argc, char** argv) {
  return tailcr::cli_main(std::vector<std::string>(argv + 1, argv + argc));
}
