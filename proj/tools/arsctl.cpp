#include <iostream>

#include "gaars/cli.hpp"

int main(int argc, char** argv) { return gaars::cli::run(argc, argv, std::cout, std::cerr); }
