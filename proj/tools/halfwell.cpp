#include <iostream>

#include "halfwell/cli/commands.hpp"

int main(int argc, char** argv) { return halfwell::cli::run(argc, argv, std::cout, std::cerr); }
