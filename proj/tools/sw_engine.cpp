#include <iostream>

#include "sw/cli/cli.hpp"

int main(int argc, char** argv) { return sw::cli::run(argc, argv, std::cout, std::cerr); }
