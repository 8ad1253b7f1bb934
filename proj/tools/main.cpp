#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return sl2::cli::run(argc, argv, std::cout, std::cerr); }
