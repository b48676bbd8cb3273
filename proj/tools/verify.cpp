#include <iostream>

#include "normcert/cli.hpp"

int main(int argc, char** argv) {
  return normcert::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
