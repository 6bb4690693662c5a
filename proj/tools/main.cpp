#include <iostream>

#include "lensroots/cli.hpp"

int main(int argc, char** argv) { return lensroots::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
