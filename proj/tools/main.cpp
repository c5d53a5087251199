#include <iostream>

#include "cli/cli.hpp"

int main(int argc, char** argv) { return binform::cli::run(argc, argv, std::cout, std::cerr); }
