#include <iostream>

#include "plasma/cli.hpp"

int main(int argc, char** argv) { return plasma::cli::run_main(argc, argv, std::cout, std::cerr); }
