#include <iostream>

#include "ffcensus/cli.hpp"

int main(int argc, char** argv) { return ffcensus::cli::run(argc, argv, std::cout, std::cerr); }
