#include <iostream>

#include "collin/cli.hpp"

int main(int argc, char** argv) { return collin::run_cli(argc, argv, std::cout, std::cerr); }
