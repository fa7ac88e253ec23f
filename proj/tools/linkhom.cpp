#include <iostream>

#include "linkhom/cli.hpp"

int main(int argc, char** argv) { return linkhom::cli::main_with_args(argc, argv, std::cout, std::cerr); }
