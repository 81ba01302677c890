#include <iostream>

#include "grh/cli.hpp"

int main(int argc, char** argv) { return grh::run_cli(argc, argv, std::cout, std::cerr); }
