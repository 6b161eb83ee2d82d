#include <iostream>

#include "hyperchrom/cli.hpp"

int main(int argc, char** argv) { return hyperchrom::run_cli(argc, argv, std::cout, std::cerr); }
