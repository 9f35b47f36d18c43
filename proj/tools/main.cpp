#include <iostream>

#include "cli.hpp"

int main(int argc, char **argv) { return lame3trf::cli::run(argc, argv, std::cout, std::cerr); }
