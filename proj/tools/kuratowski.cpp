#include <iostream>

#include "kuratowski/cli.hpp"

int main(int argc, char** argv) {
  return kuratowski::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
