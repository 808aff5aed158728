#include "fdds/cli.hpp"

int main(int argc, char** argv) {
  return fdds::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
