#include <iostream>

#include "pairwords/cli.hpp"

int main(int argc, char** argv) { return pairwords::run_cli(argc, argv, std::cout, std::cerr); }
