#include <iostream>

#include "hermite/cli.hpp"

int main(int argc, char** argv) { return hermite::cli::main(argc, argv, std::cout, std::cerr); }
