#include <iostream>

#include "pimac/cli.hpp"

int main(int argc, char** argv) { return pimac::run_cli(argc, argv, std::cout, std::cerr); }
