#include <iostream>

#include "gorconf/cli.hpp"

int main(int argc, char** argv) { return gorconf::cli::run(argc, argv, std::cout, std::cerr); }
