#include <iostream>

#include "toricapprox/cli.hpp"

int main(int argc, char** argv) { return toric::cli::run(argc, argv, std::cout, std::cerr); }
