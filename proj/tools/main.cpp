#include "punctual/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return punctual::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
