#include "orbicat/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return orbicat::cli_main(argc, argv, std::cout, std::cerr); }
