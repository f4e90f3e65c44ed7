#include <iostream>

#include "lsig/cli/cli.hpp"

int main(int argc, char** argv) { return lsig::cli::run_cli(argc, argv, std::cout, std::cerr); }
