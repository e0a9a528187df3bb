#include "gtn/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return gtn::cli::run(argc, argv, std::cout, std::cerr); }
