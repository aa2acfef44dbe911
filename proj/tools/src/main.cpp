#include <iostream>

#include "lfl_cli/commands.hpp"

int main(int argc, char** argv) { return lfl::cli::run_cli(argc, argv, std::cout, std::cerr); }
