#include <iostream>

#include "mucrit/cli.hpp"

int main(int argc, char** argv) {
  return mucrit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
