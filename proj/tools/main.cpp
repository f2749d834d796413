#include <iostream>

#include "digigap/cli.hpp"

int main(int argc, char** argv) { return digigap::cli::run(argc, argv, std::cout, std::cerr); }
