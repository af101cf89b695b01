#include <iostream>

#include "cobsig/cli.hpp"

int main(int argc, char** argv) { return cobsig::cli::run(argc, argv, std::cout, std::cerr); }
