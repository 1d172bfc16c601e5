#include <iostream>

#include "crossunion/cli.hpp"

int main(int argc, char** argv) { return crossunion::run(argc, argv, std::cout, std::cerr); }
