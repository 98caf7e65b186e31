#include <iostream>

#include "mseg/cli.hpp"

int main(int argc, char** argv) { return mseg::run_cli(argc, argv, std::cout, std::cerr); }
