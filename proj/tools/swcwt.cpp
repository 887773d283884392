#include <iostream>

#include "swcwt/cli/commands.hpp"

int main(int argc, char** argv) { return swcwt::cli::run_cli(argc, argv, std::cout, std::cerr); }
