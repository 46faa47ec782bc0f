#include "debell/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return debell::run_cli(argc, argv, std::cout, std::cerr); }
