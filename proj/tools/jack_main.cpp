#include <iostream>

#include "jack/cli.hpp"

int main(int argc, char** argv) { return jack::run_cli(argc, argv, std::cout, std::cerr); }
