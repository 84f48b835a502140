#include "cli_run.hpp"

#include <iostream>

int main(int argc, char** argv) { return hpsum::cli::run(argc, argv, std::cout, std::cerr); }
