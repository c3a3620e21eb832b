#include <string>
#include <vector>

#include "mnm/cli.hpp"

int main(int argc, char** argv) {
  return mnm::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
