#include <iostream>

#include "fracchern/cli.hpp"

int main(int argc, char** argv) { return fracchern::run_cli(argc, argv, std::cout, std::cerr); }
