#include "gfchase/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return gfchase::cli::run(argc, argv, std::cout, std::cerr); }
