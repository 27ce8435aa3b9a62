#include <iostream>

#include "syntaft/cli.hpp"

int main(int argc, char** argv) { return syntaft::run_cli(argc, argv, std::cout, std::cerr); }
