#include "rforge/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return rforge::cli::run(argc, argv, std::cout, std::cerr); }
