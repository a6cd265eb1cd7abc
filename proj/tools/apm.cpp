#include <iostream>

#include "apm/commands.hpp"

int main(int argc, char** argv) { return apm::cli::main(argc, argv, std::cout, std::cerr); }
