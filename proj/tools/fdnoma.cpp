#include <iostream>

#include "fdnoma/cli.hpp"

int main(int argc, char** argv) { return fdnoma::run_cli(argc, argv, std::cout, std::cerr); }
