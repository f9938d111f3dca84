#include <iostream>

#include "gendouble/cli.hpp"

int main(int argc, char** argv) { return gd::run_cli(argc, argv, std::cout, std::cerr); }
