#include <iostream>

#include "hopspan/cli.hpp"

int main(int argc, char** argv) { return hopspan::run_cli(argc, argv, std::cout, std::cerr); }
