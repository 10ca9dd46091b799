#include <iostream>

#include "bergeham/cli/cli.hpp"

int main(int argc, char** argv) { return bergeham::cli::run(argc, argv, std::cout, std::cerr); }
