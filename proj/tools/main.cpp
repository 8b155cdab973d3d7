#include <iostream>

#include "ym2d/cli.hpp"

int main(int argc, char** argv) { return ym2d::cli::run(argc, argv, std::cout, std::cerr); }
