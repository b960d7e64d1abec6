#include "arkimex/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return arkimex::run_cli(argc, argv, std::cout, std::cerr); }
