#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return relmark::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}
