#include "fusscat_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fusscat::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
