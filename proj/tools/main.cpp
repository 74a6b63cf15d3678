#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return c14::run_cli(argc, argv, std::cout, std::cerr); }
